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

#include "tdcode/channel.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tdcode {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw Error(ErrorCode::kInvalidArgument, "empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();  // full 64-bit range
  // Reject the low 2^64 mod span values so that x % span is exact.
  const std::uint64_t reject_below = (0 - span) % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x < reject_below);
  return lo + x % span;
}

Word Rng::word(std::size_t length, unsigned q) {
  Word w(length);
  for (auto& s : w) s = static_cast<Symbol>(uniform(0, q - 1));
  return w;
}

Word apply_duplication(WordView word, std::size_t offset, std::size_t length) {
  if (length == 0 || offset + length > word.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplication (i=" + std::to_string(offset) + ", l=" + std::to_string(length) +
                    ") does not fit a word of length " + std::to_string(word.size()));
  }
  Word out;
  out.reserve(word.size() + length);
  auto copy_begin = word.begin() + static_cast<std::ptrdiff_t>(offset);
  auto copy_end = copy_begin + static_cast<std::ptrdiff_t>(length);
  out.insert(out.end(), word.begin(), copy_end);
  out.insert(out.end(), copy_begin, copy_end);
  out.insert(out.end(), copy_end, word.end());
  return out;
}

Word apply_duplication(WordView word, const Duplication& dup) {
  return apply_duplication(word, dup.offset, dup.length);
}

std::pair<Word, Duplication> random_duplication(WordView word, const ChannelSpec& spec,
                                                const CodeParams& params, Rng& rng) {
  const std::size_t lo = spec.min_length.value_or(params.threshold);
  if (lo < 1) throw Error(ErrorCode::kInvalidArgument, "minimum length must be positive");
  if (spec.max_length && *spec.max_length < lo) {
    throw Error(ErrorCode::kInvalidArgument, "maximum length below minimum length");
  }
  if (word.size() < lo) {
    throw Error(ErrorCode::kInvalidArgument,
                "word of length " + std::to_string(word.size()) +
                    " is shorter than the minimum duplication length " + std::to_string(lo));
  }
  const std::size_t hi = std::min(spec.max_length.value_or(word.size()), word.size());
  Duplication dup;
  dup.length = rng.uniform(lo, hi);
  dup.offset = rng.uniform(0, word.size() - dup.length);
  return {apply_duplication(word, dup), dup};
}

std::pair<Word, Duplication> random_duplication(WordView word, const ChannelSpec& spec,
                                                const CodeParams& params) {
  Rng rng(spec.seed);
  return random_duplication(word, spec, params, rng);
}

}  // namespace tdcode
