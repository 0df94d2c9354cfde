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

#include "tdcode/core.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace tdcode {

std::string_view reason(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kMalformedCodeword: return "malformed_codeword";
    case ErrorCode::kNotCorrectable: return "not_correctable";
    case ErrorCode::kVerificationFailed: return "verification_failed";
    case ErrorCode::kGuardExceeded: return "guard_exceeded";
    case ErrorCode::kInternalDefect: return "internal_defect";
  }
  return "unknown";
}

std::uint64_t checked_power(unsigned q, std::size_t e) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (result > kLimit / q) {
      throw Error(ErrorCode::kInvalidArgument,
                  "q^" + std::to_string(e) + " does not fit in 63 bits");
    }
    result *= q;
  }
  return result;
}

std::uint64_t CodeParams::window_space() const { return checked_power(q, window); }

CodeParams derive_params(unsigned q, std::size_t n) {
  if (q < 2 || q > kMaxAlphabet) {
    throw Error(ErrorCode::kInvalidArgument,
                "alphabet size must be in [2, 256], got " + std::to_string(q));
  }
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "message length must be at least 2, got " + std::to_string(n));
  }
  CodeParams p;
  p.q = q;
  p.n = n;
  std::uint64_t power = 1;
  while (power < n) {
    power *= q;
    ++p.window;
  }
  p.threshold = 4 * p.window + 1;
  return p;
}

DigitBlock to_digits(std::uint64_t value, const CodeParams& params) {
  if (value >= params.window_space()) {
    throw Error(ErrorCode::kInvalidArgument,
                "value " + std::to_string(value) + " needs more than " +
                    std::to_string(params.window) + " base-" +
                    std::to_string(params.q) + " digits");
  }
  DigitBlock block{value, Word(params.window, 0)};
  for (std::size_t k = params.window; k-- > 0;) {
    block.digits[k] = static_cast<Symbol>(value % params.q);
    value /= params.q;
  }
  return block;
}

std::uint64_t from_digits(WordView digits, const CodeParams& params) {
  if (digits.size() != params.window) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(params.window) + " digits, got " +
                    std::to_string(digits.size()));
  }
  std::uint64_t value = 0;
  for (Symbol d : digits) {
    if (d >= params.q) {
      throw Error(ErrorCode::kInvalidArgument, "digit out of range");
    }
    value = value * params.q + d;
  }
  return value;
}

void check_symbols(WordView word, unsigned q) {
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] >= q) {
      throw Error(ErrorCode::kMalformedInput,
                  "symbol " + std::to_string(word[k]) + " at position " +
                      std::to_string(k + 1) + " is not below q=" +
                      std::to_string(q));
    }
  }
}

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string format_word(WordView word, unsigned q) {
  if (q <= kDigits.size()) {
    std::string out;
    out.reserve(word.size());
    for (Symbol s : word) out.push_back(kDigits.at(s));
    return out;
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ',';
    os << static_cast<unsigned>(word[k]);
  }
  return os.str();
}

Word parse_word(std::string_view text, unsigned q) {
  if (q < 2 || q > kMaxAlphabet) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be in [2, 256]");
  }
  text = trim(text);
  Word word;
  if (q <= kDigits.size()) {
    word.reserve(text.size());
    for (char c : text) {
      auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto pos = kDigits.find(lower);
      if (pos == std::string_view::npos || pos >= q) {
        throw Error(ErrorCode::kMalformedInput,
                    std::string("character '") + c + "' is not a symbol for q=" +
                        std::to_string(q));
      }
      word.push_back(static_cast<Symbol>(pos));
    }
    return word;
  }
  if (text.empty()) return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = trim(text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start));
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        value >= q) {
      throw Error(ErrorCode::kMalformedInput,
                  "token '" + std::string(token) + "' is not a symbol for q=" +
                      std::to_string(q));
    }
    word.push_back(static_cast<Symbol>(value));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

}  // namespace tdcode
