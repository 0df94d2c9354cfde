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

#include <array>

#include "oracles.hpp"
#include "tdcode/channel.hpp"
#include "tdcode/repeats.hpp"

using namespace tdcode;

namespace {

std::optional<std::pair<std::size_t, std::size_t>> as_pair(std::optional<Duplication> d) {
  if (!d) return std::nullopt;
  return std::make_pair(d->offset, d->length);
}

}  // namespace

TEST_CASE("leftmost long square on the worked examples") {
  auto d = find_leftmost_long(parse_word("0012123312", 4), 2);
  REQUIRE(d);
  CHECK(d->offset == 2);
  CHECK(d->length == 2);

  d = find_leftmost_long(parse_word("0012333312", 4), 2);
  REQUIRE(d);
  CHECK(d->offset == 4);
  CHECK(d->length == 2);

  CHECK_FALSE(find_leftmost_long(parse_word("0123", 4), 1));

  d = find_leftmost_long(parse_word("0000000000abcdef0", 16), 5);
  REQUIRE(d);
  CHECK(*d == Duplication{0, 5});
  CHECK(as_pair(d) == oracle::leftmost_square(parse_word("0000000000abcdef0", 16), 5));
}

TEST_CASE("is_dup_free") {
  CHECK(is_dup_free(Word{0, 1, 0}, 1));
  CHECK_FALSE(is_dup_free(Word{0, 1, 0, 1}, 1));
  CHECK(is_dup_free(Word{}, 1));
  CHECK(is_dup_free(Word{0, 1, 0, 1}, 3));
}

TEST_CASE("smallest half-length wins at a shared offset") {
  // 0000 0000: squares at offset 0 with half 1, 2, 3, 4
  Word zeros(8, 0);
  CHECK(*find_leftmost_long(zeros, 2) == Duplication{0, 2});
  CHECK(*find_leftmost_long(zeros, 3) == Duplication{0, 3});
  // a square at offset 0 counts
  CHECK(*find_leftmost_long(Word{1, 2, 1, 2, 0}, 2) == Duplication{0, 2});
}

TEST_CASE("matches the naive scanner on all short binary words") {
  for (std::size_t len = 0; len <= 12; ++len) {
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << len); ++idx) {
      Word w = oracle::digits(idx, 2, len);
      for (std::size_t K = 1; K <= 3; ++K) {
        REQUIRE(as_pair(find_leftmost_long(w, K)) == oracle::leftmost_square(w, K));
      }
    }
  }
}

TEST_CASE("matches the naive scanner on random and planted words") {
  Rng rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned q = std::array<unsigned, 3>{2, 4, 16}[rng.uniform(0, 2)];
    Word w = rng.word(rng.uniform(1, 150), q);
    if (trial % 2 && w.size() >= 4) {
      // plant a square to exercise long halves
      const std::size_t l = rng.uniform(1, w.size() / 2);
      const std::size_t i = rng.uniform(0, w.size() - l);
      w = apply_duplication(w, i, l);
    }
    const std::size_t K = rng.uniform(1, 12);
    REQUIRE(as_pair(find_leftmost_long(w, K)) == oracle::leftmost_square(w, K));
  }
}

TEST_CASE("a channel duplication is always found") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = rng.word(rng.uniform(10, 120), 4);
    const std::size_t K = rng.uniform(1, 8);
    if (w.size() < K) continue;
    const std::size_t l = rng.uniform(K, w.size());
    const std::size_t i = rng.uniform(0, w.size() - l);
    Word y = apply_duplication(w, i, l);
    auto d = find_leftmost_long(y, K);
    REQUIRE(d);
    REQUIRE(d->offset <= i);
  }
}

TEST_CASE("square of a fixed half-length") {
  Word w = parse_word("0012123312", 4);
  CHECK(find_square_with_length(w, 2) == 2u);
  CHECK(find_square_with_length(w, 1) == 0u);  // "00"
  CHECK_FALSE(find_square_with_length(w, 3));
  CHECK_FALSE(find_square_with_length(w, 6));
  CHECK_THROWS_AS(find_square_with_length(w, 0), Error);
}
