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

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Word type and are only used to check it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tdcode/core.hpp"

namespace tdcode::oracle {

/// All (offset, half) pairs scanned in lexicographic order; O(n^3).
inline std::optional<std::pair<std::size_t, std::size_t>> leftmost_square(WordView w,
                                                                          std::size_t min_len) {
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t l = std::max<std::size_t>(min_len, 1); p + 2 * l <= w.size(); ++l) {
      bool eq = true;
      for (std::size_t k = 0; k < l && eq; ++k) eq = w[p + k] == w[p + l + k];
      if (eq) return std::make_pair(p, l);
    }
  }
  return std::nullopt;
}

/// O(n^2) check: any square with half >= min_len.
inline bool has_long_square(WordView w, std::size_t min_len) {
  for (std::size_t l = std::max<std::size_t>(min_len, 1); 2 * l <= w.size(); ++l) {
    std::size_t run = 0;
    for (std::size_t j = 0; j + l < w.size(); ++j) {
      run = w[j] == w[j + l] ? run + 1 : 0;
      if (run >= l) return true;
    }
  }
  return false;
}

inline std::map<Word, std::uint64_t> window_tally(WordView w, std::size_t len) {
  std::map<Word, std::uint64_t> tally;
  for (std::size_t s = 0; s + len <= w.size(); ++s) {
    ++tally[Word(w.begin() + s, w.begin() + s + len)];
  }
  return tally;
}

inline bool occurs(WordView haystack, WordView needle) {
  if (needle.size() > haystack.size()) return false;
  for (std::size_t s = 0; s + needle.size() <= haystack.size(); ++s) {
    bool eq = true;
    for (std::size_t k = 0; k < needle.size() && eq; ++k) eq = haystack[s + k] == needle[k];
    if (eq) return true;
  }
  return false;
}

/// Absent-window descent computed from scratch: at each level count the
/// windows that start with the candidate prefix.
inline Word absent_window(WordView w, unsigned q, std::size_t len) {
  Word prefix;
  std::uint64_t capacity = 1;
  for (std::size_t k = 0; k < len; ++k) capacity *= q;
  for (std::size_t level = 0; level < len; ++level) {
    capacity /= q;
    bool found = false;
    for (unsigned d = 0; d < q && !found; ++d) {
      Word cand = prefix;
      cand.push_back(static_cast<Symbol>(d));
      std::uint64_t count = 0;
      for (std::size_t s = 0; s + len <= w.size(); ++s) {
        bool eq = true;
        for (std::size_t k = 0; k < cand.size() && eq; ++k) eq = w[s + k] == cand[k];
        if (eq) ++count;
      }
      if (count < capacity) {
        prefix = cand;
        found = true;
      }
    }
    if (!found) return {};
  }
  return prefix;
}

inline Word digits(std::uint64_t v, unsigned q, std::size_t len) {
  Word d;
  for (std::size_t k = 0; k < len; ++k) {
    d.push_back(static_cast<Symbol>(v % q));
    v /= q;
  }
  std::reverse(d.begin(), d.end());
  return d;
}

/// Straight-line encoder over a plain vector.
inline Word encode(WordView x, unsigned q, std::size_t L, std::size_t K) {
  Word w(x.begin(), x.end());
  w.push_back(0);
  while (auto sq = leftmost_square(w, K)) {
    auto [i, l] = *sq;
    w.erase(w.begin() + i, w.begin() + i + l);
    auto push = [&](const Word& piece) { w.insert(w.end(), piece.begin(), piece.end()); };
    push(digits(i, q, L));
    const std::size_t r = (l - 2 * L - 1) / L;
    const std::size_t t = (l - 1) % L;
    for (std::size_t k = 1; k < r; ++k) push(absent_window(w, q, L));
    push(Word(t, 0));
    push(absent_window(w, q, L));
    push(digits(l, q, L));
    w.push_back(1);
  }
  return w;
}

}  // namespace tdcode::oracle
