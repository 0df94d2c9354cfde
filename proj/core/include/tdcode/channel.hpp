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
#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "tdcode/core.hpp"
#include "tdcode/repeats.hpp"

namespace tdcode {

/// Seeded generator used everywhere randomness is needed: std::mt19937_64
/// (fully specified by the standard) with unbiased bounded draws done by
/// rejection, so streams are identical across platforms and standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  Word word(std::size_t length, unsigned q);

 private:
  std::mt19937_64 engine_;
};

struct ChannelSpec {
  std::uint64_t seed = 0;
  /// Defaults to the code threshold K.
  std::optional<std::size_t> min_length;
  /// Defaults to, and is always capped at, the word length.
  std::optional<std::size_t> max_length;
};

/// tau_{offset,length}: repeats word[offset, offset+length) in place.
Word apply_duplication(WordView word, std::size_t offset, std::size_t length);
Word apply_duplication(WordView word, const Duplication& dup);

/// Draws the length uniformly from [min_length, min(max_length, |w|)] and
/// then the offset uniformly from [0, |w| - length].
std::pair<Word, Duplication> random_duplication(WordView word, const ChannelSpec& spec,
                                                const CodeParams& params, Rng& rng);
std::pair<Word, Duplication> random_duplication(WordView word, const ChannelSpec& spec,
                                                const CodeParams& params);

}  // namespace tdcode
