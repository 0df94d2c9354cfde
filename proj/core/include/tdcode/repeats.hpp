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

#include <compare>
#include <cstddef>
#include <optional>

#include "tdcode/core.hpp"

namespace tdcode {

/// A tandem square v v inside a word: `offset` symbols precede the left
/// copy, `length` is |v|.
struct Duplication {
  std::size_t offset = 0;
  std::size_t length = 0;

  friend auto operator<=>(const Duplication&, const Duplication&) = default;
};

/// The square with the smallest offset among all squares whose half-length
/// is at least `min_length`; ties at equal offset go to the smallest length.
///
/// Divide and conquer over the word (Main-Lorentz style): squares crossing
/// the midpoint of a segment are found with two Z-function passes, and the
/// right half of a segment is only searched when neither its left half nor
/// the crossing squares produced a candidate.
std::optional<Duplication> find_leftmost_long(WordView word, std::size_t min_length);

/// True iff the word has no square with half-length >= min_length.
bool is_dup_free(WordView word, std::size_t min_length);

/// Smallest offset p with word[p, p+length) == word[p+length, p+2*length).
std::optional<std::size_t> find_square_with_length(WordView word, std::size_t length);

}  // namespace tdcode
