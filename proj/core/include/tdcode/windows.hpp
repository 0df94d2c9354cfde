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
#include <unordered_map>
#include <vector>

#include "tdcode/core.hpp"

namespace tdcode {

/// Counter trie over all length-`depth` windows of a tracked word.
///
/// A node at level m is identified by the base-q value of its m-symbol
/// prefix. Leaf counters hold window multiplicities; every internal counter
/// is the sum of its children, so the root holds the number of windows.
/// Small tries (q^depth <= 2^24) are stored densely level by level, larger
/// ones in per-level hash maps holding only nonzero counters.
class WindowIndex {
 public:
  enum class Storage { kAuto, kDense, kSparse };

  WindowIndex(unsigned q, std::size_t depth, Storage storage = Storage::kAuto);

  static WindowIndex build(WordView word, const CodeParams& params,
                           Storage storage = Storage::kAuto);
  static WindowIndex build(WordView word, unsigned q, std::size_t depth,
                           Storage storage = Storage::kAuto);

  unsigned arity() const { return q_; }
  std::size_t depth() const { return depth_; }
  bool dense() const { return dense_; }

  void add_window(WordView window);
  void remove_window(WordView window);

  /// Updates the index after `suffix` is appended to `before`. Only the last
  /// depth-1 symbols of `before` are read.
  void apply_append(WordView before, WordView suffix);

  /// Updates the index after positions a..b (1-based, inclusive) are removed
  /// from `before`: windows overlapping the range are dropped and the
  /// windows spanning the new junction are added.
  void apply_delete(WordView before, std::size_t a, std::size_t b);

  /// Deterministic absent-window search. Descends from the root, at level m
  /// taking the smallest digit whose child counter is below q^(depth-m-1).
  /// Throws kInternalDefect when every window is present.
  Word find_absent() const;

  /// Counter of the node addressed by `prefix` (0 <= |prefix| <= depth).
  std::uint64_t count(WordView prefix) const;
  std::uint64_t total() const { return counter(0, 0); }

  /// True iff every internal counter equals the sum of its children.
  bool check_sums() const;

  friend bool operator==(const WindowIndex& a, const WindowIndex& b);

 private:
  std::uint64_t counter(std::size_t level, std::uint64_t key) const;
  void adjust(WordView window, bool increment);
  void add_all(WordView word);

  unsigned q_;
  std::size_t depth_;
  bool dense_;
  std::vector<std::uint64_t> thresholds_;  // q^(depth - level)
  std::vector<std::vector<std::uint32_t>> dense_levels_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> sparse_levels_;
};

}  // namespace tdcode
