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

#include "doctest.h"

#include "oracles.hpp"
#include "tdcode/channel.hpp"
#include "tdcode/codec.hpp"

using namespace tdcode;

namespace {

Word periodic(std::size_t n, WordView period) {
  Word w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = period[k % period.size()];
  return w;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInternalDefect;
}

}  // namespace

TEST_CASE("short messages get a single trailing zero") {
  const auto p = derive_params(2, 8);
  REQUIRE(!p.long_duplication_possible());
  const Word x = parse_word("10110100", 2);
  const Word cw = encode(x, p);
  CHECK(format_word(cw, 2) == "101101000");
  CHECK(decode(cw, p) == x);
  CHECK(is_codeword(cw, p));
  CHECK_FALSE(is_codeword(parse_word("101101001", 2), p));
  CHECK_FALSE(is_codeword(parse_word("10110100", 2), p));
}

TEST_CASE("hex example traced by hand") {
  const auto p = derive_params(16, 16);
  const Word x = parse_word("0000000000abcdef", 16);
  auto trace = encode_traced(x, p);
  CHECK(format_word(trace.codeword, 16) == "00000abcdef001251");
  CHECK(trace.codeword == oracle::encode(x, 16, p.window, p.threshold));
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].removed == Duplication{0, 5});
  CHECK(trace.steps[0].full_windows == 2);
  CHECK(trace.steps[0].zero_padding == 0);
  CHECK(decode(trace.codeword, p) == x);
  CHECK(is_codeword(trace.codeword, p));
}

TEST_CASE("roundtrip on random messages") {
  Rng rng(31);
  for (auto [q, n] : {std::pair{2u, 64u}, {4u, 64u}, {16u, 16u}, {3u, 40u}}) {
    const auto p = derive_params(q, n);
    for (int k = 0; k < 300; ++k) {
      const Word x = rng.word(n, q);
      const Word cw = encode(x, p);
      REQUIRE(cw.size() == n + 1);
      REQUIRE_FALSE(oracle::has_long_square(cw, p.threshold));
      REQUIRE(decode(cw, p) == x);
    }
  }
}

TEST_CASE("structured inputs match the reference encoder") {
  for (auto [q, n] : {std::pair{2u, 64u}, {2u, 100u}, {4u, 64u}, {16u, 16u}, {5u, 60u}}) {
    const auto p = derive_params(q, n);
    std::vector<Word> inputs;
    inputs.push_back(Word(n, 0));
    inputs.push_back(Word(n, static_cast<Symbol>(q - 1)));
    inputs.push_back(periodic(n, Word{0, 1}));
    inputs.push_back(periodic(n, Word{1, 0, 0}));
    Rng rng(q * 1000 + n);
    for (std::size_t period : {p.threshold, p.threshold + 1, 2 * p.threshold - 1}) {
      inputs.push_back(periodic(n, rng.word(period, q)));
    }
    for (const Word& x : inputs) {
      auto trace = encode_traced(x, p);
      REQUIRE(trace.codeword == oracle::encode(x, q, p.window, p.threshold));
      REQUIRE(decode(trace.codeword, p) == x);
      REQUIRE(trace.steps.size() <= (n + 1) / p.threshold);
    }
  }
}

TEST_CASE("rebuilding the window index gives the same codewords") {
  Rng rng(8);
  const auto p = derive_params(2, 128);
  EncodeOptions rebuild{true};
  for (int k = 0; k < 100; ++k) {
    Word x = k % 3 ? rng.word(128, 2) : periodic(128, rng.word(rng.uniform(1, 40), 2));
    REQUIRE(encode(x, p) == encode(x, p, rebuild));
  }
}

TEST_CASE("trace invariants hold at every step") {
  Rng rng(17);
  for (auto [q, n] : {std::pair{2u, 200u}, {4u, 150u}, {16u, 16u}}) {
    const auto p = derive_params(q, n);
    const std::size_t L = p.window;
    for (int k = 0; k < 60; ++k) {
      Word x = periodic(n, rng.word(rng.uniform(1, 2 * p.threshold), q));
      auto trace = encode_traced(x, p);
      REQUIRE(trace.steps.size() <= (n + 1) / p.threshold);
      for (const auto& step : trace.steps) {
        const std::size_t l = step.removed.length;
        REQUIRE(l >= p.threshold);
        REQUIRE(step.full_windows >= 2);
        REQUIRE(2 * L + step.full_windows * L + step.zero_padding + 1 == l);
        REQUIRE(step.fillers.size() == step.full_windows);
        for (const auto& [win, prefix_len] : step.fillers) REQUIRE(win.size() == L);
      }
    }
  }
}

TEST_CASE("fillers are absent from the word they were chosen against") {
  // replay the reference encoder's word history to check each filler
  const auto p = derive_params(2, 120);
  const std::size_t L = p.window;
  Word x(120, 0);
  auto trace = encode_traced(x, p);
  REQUIRE(!trace.steps.empty());
  Word w = x;
  w.push_back(0);
  for (const auto& step : trace.steps) {
    const auto [i, l] = step.removed;
    w.erase(w.begin() + i, w.begin() + i + l);
    auto push = [&](WordView piece) { w.insert(w.end(), piece.begin(), piece.end()); };
    push(oracle::digits(i, 2, L));
    for (std::size_t k = 0; k < step.fillers.size(); ++k) {
      const auto& [win, prefix_len] = step.fillers[k];
      if (k + 1 == step.fillers.size()) push(Word(step.zero_padding, 0));
      REQUIRE(prefix_len == w.size());
      REQUIRE_FALSE(oracle::occurs(w, win));
      push(win);
    }
    push(oracle::digits(l, 2, L));
    w.push_back(1);
  }
  CHECK(w == trace.codeword);
}

TEST_CASE("every single long duplication is corrected") {
  const auto p = derive_params(16, 16);
  Rng rng(123);
  for (int k = 0; k < 20; ++k) {
    const Word x = k == 0 ? parse_word("0000000000abcdef", 16) : rng.word(16, 16);
    const Word cw = encode(x, p);
    CHECK(correct(cw, p) == cw);
    for (std::size_t l = p.threshold; l <= cw.size(); ++l) {
      for (std::size_t i = 0; i + l <= cw.size(); ++i) {
        const Word y = apply_duplication(cw, i, l);
        REQUIRE(correct(y, p) == cw);
        REQUIRE(decode(correct(y, p), p) == x);
      }
    }
  }
}

TEST_CASE("worked example corrections with a lowered threshold") {
  const auto p = derive_params(4, 7);
  CorrectOptions opt{2};
  CHECK(format_word(correct(parse_word("0012123312", 4), p, opt), 4) == "00123312");
  CHECK(format_word(correct(parse_word("0012333312", 4), p, opt), 4) == "00123312");
  // without the override the excess of 2 is below K = 9
  CHECK(code_of([&] { correct(parse_word("0012123312", 4), p); }) == ErrorCode::kNotCorrectable);
}

TEST_CASE("error paths") {
  const auto p = derive_params(16, 16);
  CHECK(code_of([&] { encode(Word(15, 0), p); }) == ErrorCode::kMalformedInput);
  CHECK(code_of([&] { encode(Word(16, 16), p); }) == ErrorCode::kMalformedInput);
  CHECK(code_of([&] { decode(Word(16, 0), p); }) == ErrorCode::kMalformedInput);

  Word bad_flag = parse_word("00000abcdef001252", 16);
  CHECK(code_of([&] { decode(bad_flag, p); }) == ErrorCode::kMalformedCodeword);
  // flag 1 with a length digit below K
  CHECK(code_of([&] { decode(parse_word("00000abcdef001241", 16), p); }) ==
        ErrorCode::kMalformedCodeword);
  // offset digit pushes the square past the remaining word
  CHECK(code_of([&] { decode(parse_word("00000abcdef0f1251", 16), p); }) ==
        ErrorCode::kMalformedCodeword);

  const Word cw = encode(parse_word("0000000000abcdef", 16), p);
  CHECK(code_of([&] { correct(Word(cw.begin(), cw.end() - 1), p); }) ==
        ErrorCode::kNotCorrectable);
  Word short_excess = cw;
  short_excess.insert(short_excess.end(), {1, 2, 3});
  CHECK(code_of([&] { correct(short_excess, p); }) == ErrorCode::kNotCorrectable);
  Word no_square = cw;
  no_square.insert(no_square.end(), {1, 2, 3, 4, 5, 6});
  CHECK(code_of([&] { correct(no_square, p); }) == ErrorCode::kNotCorrectable);

  // a word that is not a codeword: the removal leaves another long square
  Word two = parse_word("0123456701234567", 16);
  two.push_back(9);
  Word y = apply_duplication(two, 0, 8);
  auto q16 = derive_params(16, 16);
  CHECK(code_of([&] { correct(y, q16); }) == ErrorCode::kVerificationFailed);
}
