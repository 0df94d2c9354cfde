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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdcode/error.hpp"

namespace tdcode {

/// One letter of the alphabet {0, ..., q-1}. Alphabets up to q = 256.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

inline constexpr unsigned kMaxAlphabet = 256;

/// Parameter bundle for a code of message length n over a q-ary alphabet.
///
/// window is the digit/window length ceil(log_q n), i.e. the smallest value
/// with q^window >= n. threshold is the minimum correctable duplication
/// half-length, 4 * window + 1.
struct CodeParams {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t window = 0;
  std::size_t threshold = 0;

  std::size_t codeword_length() const { return n + 1; }

  /// q^window; the number of distinct windows and the digit-block capacity.
  std::uint64_t window_space() const;

  /// True when a codeword is long enough to contain a square whose half is
  /// at least `threshold`, i.e. n + 1 >= 2 * threshold.
  bool long_duplication_possible() const { return n + 1 >= 2 * threshold; }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Throws kInvalidArgument for q < 2, q > 256 or n < 2.
CodeParams derive_params(unsigned q, std::size_t n);

/// q^e, throwing kInvalidArgument when the result does not fit in 63 bits.
std::uint64_t checked_power(unsigned q, std::size_t e);

/// Fixed-width base-q number, most significant digit first.
struct DigitBlock {
  std::uint64_t value = 0;
  Word digits;
};

DigitBlock to_digits(std::uint64_t value, const CodeParams& params);
std::uint64_t from_digits(WordView digits, const CodeParams& params);

/// Throws kMalformedInput if some symbol is >= q.
void check_symbols(WordView word, unsigned q);

/// Textual word format. For q <= 36 every symbol is one character of
/// 0-9a-z; for larger alphabets symbols are comma-separated decimals.
std::string format_word(WordView word, unsigned q);
Word parse_word(std::string_view text, unsigned q);

}  // namespace tdcode
