// Copyright 2026 The tdcode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdcode/core.hpp"
#include "tdcode/repeats.hpp"

namespace tdcode {

struct EncodeOptions {
  /// Rebuild the window index from the current word before every absent
  /// window request instead of updating it incrementally. Differential
  /// testing only; the output is identical.
  bool rebuild_windows = false;
};

/// One pass of the encoder loop: the removed square and the data block that
/// replaced it.
struct EncodeStep {
  Duplication removed;
  std::size_t full_windows = 0;   // r: absent windows in the filler
  std::size_t zero_padding = 0;   // t: zeros between the last two of them
  /// Absent windows in the order appended, each paired with the length of
  /// the word prefix it was chosen against.
  std::vector<std::pair<Word, std::size_t>> fillers;
};

struct EncodeTrace {
  Word codeword;
  std::vector<EncodeStep> steps;
};

/// Maps a message of length n to a codeword of length n+1 that contains no
/// square with half-length >= params.threshold.
Word encode(WordView message, const CodeParams& params, const EncodeOptions& options = {});
EncodeTrace encode_traced(WordView message, const CodeParams& params,
                          const EncodeOptions& options = {});

/// Inverse of encode. Throws kMalformedCodeword if the block structure read
/// from the right does not parse.
Word decode(WordView codeword, const CodeParams& params);

struct CorrectOptions {
  /// Smallest accepted duplication length; defaults to params.threshold.
  /// Lowering it extends correction to any word set free of squares of that
  /// half-length, e.g. hand-made examples outside the code.
  std::optional<std::size_t> min_length;
};

/// Removes a single tandem duplication from a corrupted codeword. The
/// duplication length is the excess over n+1; the leftmost square of that
/// half-length loses its left copy, and the result is checked to contain no
/// square of half >= the minimum length. Words of length n+1 are returned
/// unchanged.
Word correct(WordView received, const CodeParams& params, const CorrectOptions& options = {});

/// True iff decode succeeds and re-encoding reproduces the word.
bool is_codeword(WordView word, const CodeParams& params);

}  // namespace tdcode
