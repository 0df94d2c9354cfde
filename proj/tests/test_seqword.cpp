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

#include <cmath>

#include "tdcode/channel.hpp"
#include "tdcode/seqword.hpp"

using namespace tdcode;

namespace {

bool balanced_enough(const EditableWord& t) {
  return t.height() <= 1.45 * std::log2(static_cast<double>(t.size()) + 2.0);
}

}  // namespace

TEST_CASE("construction and positional reads") {
  const Word w{1, 0, 1, 1, 0, 1};
  EditableWord t(w);
  CHECK(t.size() == 6);
  CHECK(t.to_word() == w);
  CHECK(t.get(2) == 0);
  CHECK(t.get(6) == 1);
  CHECK(t.check_invariants());
  CHECK_THROWS_AS(t.get(0), Error);
  CHECK_THROWS_AS(t.get(7), Error);

  EditableWord empty(Word{});
  CHECK(empty.size() == 0);
  CHECK(empty.height() == 0);
  CHECK(empty.to_word().empty());

  Rng rng(7);
  Word big = rng.word(1000, 4);
  EditableWord tb(big);
  CHECK(tb.to_word() == big);
  CHECK(tb.check_invariants());
  // midpoint construction is perfectly balanced
  CHECK(tb.height() == 10);
}

TEST_CASE("insert, delete_range and slice agree with array splicing") {
  Rng rng(11);
  for (int round = 0; round < 3; ++round) {
    Word model = rng.word(50 + round * 20, 3);
    EditableWord t(model);

    const std::size_t at = rng.uniform(0, model.size());
    Word piece = rng.word(1 + round * 7, 3);
    t.insert(at, piece);
    model.insert(model.begin() + at, piece.begin(), piece.end());
    CHECK(t.to_word() == model);

    const std::size_t a = rng.uniform(1, model.size());
    const std::size_t b = rng.uniform(a, model.size());
    Word removed = t.delete_range(a, b);
    CHECK(removed == Word(model.begin() + a - 1, model.begin() + b));
    model.erase(model.begin() + a - 1, model.begin() + b);
    CHECK(t.to_word() == model);

    const std::size_t c = rng.uniform(1, model.size());
    const std::size_t d = rng.uniform(c, model.size());
    CHECK(t.slice(c, d) == Word(model.begin() + c - 1, model.begin() + d));
    CHECK(t.to_word() == model);
    CHECK(t.check_invariants());
  }
}

TEST_CASE("out-of-range edits are rejected") {
  EditableWord t(Word{0, 1, 2});
  CHECK_THROWS_AS(t.insert(4, Word{1}), Error);
  CHECK_THROWS_AS(t.delete_range(0, 1), Error);
  CHECK_THROWS_AS(t.delete_range(2, 1), Error);
  CHECK_THROWS_AS(t.slice(1, 4), Error);
  CHECK_THROWS_AS(std::move(t).split(4), Error);
}

TEST_CASE("join(split(t, k)) restores t for every k") {
  Rng rng(3);
  const Word w = rng.word(97, 5);
  for (std::size_t k = 0; k <= w.size(); ++k) {
    auto [left, right] = EditableWord(w).split(k);
    REQUIRE(left.size() == k);
    REQUIRE(right.size() == w.size() - k);
    REQUIRE(left.check_invariants());
    REQUIRE(right.check_invariants());
    REQUIRE(left.to_word() == Word(w.begin(), w.begin() + k));
    auto joined = EditableWord::join(std::move(left), std::move(right));
    REQUIRE(joined.check_invariants());
    REQUIRE(joined.to_word() == w);
  }
}

TEST_CASE("joining very unequal trees stays balanced") {
  Rng rng(5);
  EditableWord acc;
  Word model;
  for (int k = 0; k < 200; ++k) {
    Word piece = rng.word(rng.uniform(1, 3), 2);
    if (k % 2) {
      acc = EditableWord::join(std::move(acc), EditableWord(piece));
      model.insert(model.end(), piece.begin(), piece.end());
    } else {
      acc = EditableWord::join(EditableWord(piece), std::move(acc));
      model.insert(model.begin(), piece.begin(), piece.end());
    }
    REQUIRE(acc.check_invariants());
  }
  CHECK(acc.to_word() == model);
  CHECK(balanced_enough(acc));
}

TEST_CASE("copies are deep") {
  EditableWord a(Word{1, 2, 3});
  EditableWord b = a;
  b.append(Word{4});
  CHECK(a.to_word() == Word{1, 2, 3});
  CHECK(b.to_word() == Word{1, 2, 3, 4});
}

TEST_CASE("random operation sequences match the array model") {
  Rng rng(2024);
  Word model = rng.word(64, 4);
  EditableWord t(model);
  constexpr int kOps = 20000;
  for (int op = 0; op < kOps; ++op) {
    switch (rng.uniform(0, 4)) {
      case 0: {
        const std::size_t at = rng.uniform(0, model.size());
        Word piece = rng.word(rng.uniform(1, 6), 4);
        t.insert(at, piece);
        model.insert(model.begin() + at, piece.begin(), piece.end());
        break;
      }
      case 1: {
        if (model.empty()) break;
        const std::size_t a = rng.uniform(1, model.size());
        const std::size_t b = std::min<std::size_t>(model.size(), a + rng.uniform(0, 5));
        REQUIRE(t.delete_range(a, b) == Word(model.begin() + a - 1, model.begin() + b));
        model.erase(model.begin() + a - 1, model.begin() + b);
        break;
      }
      case 2: {
        if (model.empty()) break;
        const std::size_t a = rng.uniform(1, model.size());
        const std::size_t b = rng.uniform(a, std::min<std::size_t>(model.size(), a + 10));
        REQUIRE(t.slice(a, b) == Word(model.begin() + a - 1, model.begin() + b));
        break;
      }
      case 3: {
        if (model.empty()) break;
        const std::size_t i = rng.uniform(1, model.size());
        REQUIRE(t.get(i) == model[i - 1]);
        break;
      }
      default: {
        const std::size_t k = rng.uniform(0, model.size());
        auto [l, r] = std::move(t).split(k);
        t = EditableWord::join(std::move(l), std::move(r));
        break;
      }
    }
    REQUIRE(t.size() == model.size());
    if (op % 97 == 0) {
      REQUIRE(t.check_invariants());
      REQUIRE(balanced_enough(t));
    }
  }
  CHECK(t.to_word() == model);
  CHECK(t.check_invariants());
}
