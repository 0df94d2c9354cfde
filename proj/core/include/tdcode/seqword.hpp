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
#include <memory>
#include <utility>

#include "tdcode/core.hpp"

namespace tdcode {

/// A word stored as a height-balanced (AVL) tree ordered by position.
///
/// Every node keeps its symbol, the height of its subtree, the size of its
/// subtree and its left-count (1 + size of the left subtree), so positional
/// access, split and join all run in O(log n). Positions in the public API
/// are 1-based; `insert(i, ...)` inserts after position i (0 = front).
class EditableWord {
 public:
  EditableWord();
  explicit EditableWord(WordView word);
  ~EditableWord();

  EditableWord(EditableWord&&) noexcept;
  EditableWord& operator=(EditableWord&&) noexcept;
  EditableWord(const EditableWord& other);
  EditableWord& operator=(const EditableWord& other);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Height of the tree; 0 for the empty word.
  int height() const;

  Symbol get(std::size_t pos) const;

  void insert(std::size_t after, WordView piece);
  void append(WordView piece) { insert(size(), piece); }

  /// Removes positions a..b (inclusive) and returns them.
  Word delete_range(std::size_t a, std::size_t b);

  /// Copies positions a..b (inclusive) without modifying the word.
  Word slice(std::size_t a, std::size_t b) const;

  Word to_word() const;

  /// Splits into the first k symbols and the rest. Consumes *this.
  std::pair<EditableWord, EditableWord> split(std::size_t k) &&;
  static EditableWord join(EditableWord left, EditableWord right);

  /// Recomputes heights, sizes and left-counts bottom-up and compares them
  /// with the stored values; also checks the AVL balance condition.
  bool check_invariants() const;

  struct Node;

 private:
  explicit EditableWord(std::unique_ptr<Node> root);

  std::unique_ptr<Node> root_;
};

}  // namespace tdcode
