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

#include "tdcode/seqword.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace tdcode {

struct EditableWord::Node {
  Symbol symbol = 0;
  int height = 1;
  std::size_t size = 1;
  std::size_t left_count = 1;
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
};

namespace {

using Node = EditableWord::Node;
using NodePtr = std::unique_ptr<Node>;

int height_of(const Node* p) { return p ? p->height : 0; }
std::size_t size_of(const Node* p) { return p ? p->size : 0; }

void update(Node& p) {
  int hl = height_of(p.left.get());
  int hr = height_of(p.right.get());
  p.height = 1 + std::max(hl, hr);
  p.left_count = 1 + size_of(p.left.get());
  p.size = p.left_count + size_of(p.right.get());
}

NodePtr rotate_left(NodePtr x) {
  NodePtr y = std::move(x->right);
  x->right = std::move(y->left);
  update(*x);
  y->left = std::move(x);
  update(*y);
  return y;
}

NodePtr rotate_right(NodePtr x) {
  NodePtr y = std::move(x->left);
  x->left = std::move(y->right);
  update(*x);
  y->right = std::move(x);
  update(*y);
  return y;
}

// Restores balance at p when its children differ in height by at most 2.
NodePtr rebalance(NodePtr p) {
  update(*p);
  int diff = height_of(p->left.get()) - height_of(p->right.get());
  if (diff > 1) {
    if (height_of(p->left->left.get()) < height_of(p->left->right.get())) {
      p->left = rotate_left(std::move(p->left));
    }
    return rotate_right(std::move(p));
  }
  if (diff < -1) {
    if (height_of(p->right->right.get()) < height_of(p->right->left.get())) {
      p->right = rotate_right(std::move(p->right));
    }
    return rotate_left(std::move(p));
  }
  return p;
}

NodePtr join_right(NodePtr tl, NodePtr mid, NodePtr tr) {
  if (height_of(tl->right.get()) <= height_of(tr.get()) + 1) {
    mid->left = std::move(tl->right);
    mid->right = std::move(tr);
    update(*mid);
    if (mid->height <= height_of(tl->left.get()) + 1) {
      tl->right = std::move(mid);
      update(*tl);
      return tl;
    }
    tl->right = rotate_right(std::move(mid));
    update(*tl);
    return rotate_left(std::move(tl));
  }
  tl->right = join_right(std::move(tl->right), std::move(mid), std::move(tr));
  update(*tl);
  if (tl->right->height <= height_of(tl->left.get()) + 1) return tl;
  return rotate_left(std::move(tl));
}

NodePtr join_left(NodePtr tl, NodePtr mid, NodePtr tr) {
  if (height_of(tr->left.get()) <= height_of(tl.get()) + 1) {
    mid->left = std::move(tl);
    mid->right = std::move(tr->left);
    update(*mid);
    if (mid->height <= height_of(tr->right.get()) + 1) {
      tr->left = std::move(mid);
      update(*tr);
      return tr;
    }
    tr->left = rotate_left(std::move(mid));
    update(*tr);
    return rotate_right(std::move(tr));
  }
  tr->left = join_left(std::move(tl), std::move(mid), std::move(tr->left));
  update(*tr);
  if (tr->left->height <= height_of(tr->right.get()) + 1) return tr;
  return rotate_right(std::move(tr));
}

// Concatenates tl, the single detached node mid, and tr.
NodePtr join3(NodePtr tl, NodePtr mid, NodePtr tr) {
  int hl = height_of(tl.get());
  int hr = height_of(tr.get());
  if (hl > hr + 1) return join_right(std::move(tl), std::move(mid), std::move(tr));
  if (hr > hl + 1) return join_left(std::move(tl), std::move(mid), std::move(tr));
  mid->left = std::move(tl);
  mid->right = std::move(tr);
  update(*mid);
  return mid;
}

std::pair<NodePtr, NodePtr> split_last(NodePtr t) {
  if (!t->right) {
    NodePtr rest = std::move(t->left);
    update(*t);
    return {std::move(rest), std::move(t)};
  }
  auto [rest, last] = split_last(std::move(t->right));
  t->right = std::move(rest);
  return {rebalance(std::move(t)), std::move(last)};
}

NodePtr join2(NodePtr tl, NodePtr tr) {
  if (!tl) return tr;
  if (!tr) return tl;
  auto [rest, last] = split_last(std::move(tl));
  return join3(std::move(rest), std::move(last), std::move(tr));
}

std::pair<NodePtr, NodePtr> split_at(NodePtr t, std::size_t k) {
  if (!t) return {};
  std::size_t ls = size_of(t->left.get());
  if (k <= ls) {
    auto [a, b] = split_at(std::move(t->left), k);
    NodePtr r = std::move(t->right);
    return {std::move(a), join3(std::move(b), std::move(t), std::move(r))};
  }
  auto [a, b] = split_at(std::move(t->right), k - ls - 1);
  NodePtr l = std::move(t->left);
  return {join3(std::move(l), std::move(t), std::move(a)), std::move(b)};
}

// Midpoint recursion: the middle symbol becomes the root.
NodePtr build(WordView word) {
  if (word.empty()) return nullptr;
  std::size_t mid = word.size() / 2;
  auto node = std::make_unique<Node>();
  node->symbol = word[mid];
  node->left = build(word.first(mid));
  node->right = build(word.subspan(mid + 1));
  update(*node);
  return node;
}

NodePtr clone(const Node* p) {
  if (!p) return nullptr;
  auto node = std::make_unique<Node>();
  node->symbol = p->symbol;
  node->height = p->height;
  node->size = p->size;
  node->left_count = p->left_count;
  node->left = clone(p->left.get());
  node->right = clone(p->right.get());
  return node;
}

void collect(const Node* p, Word& out) {
  while (p) {
    collect(p->left.get(), out);
    out.push_back(p->symbol);
    p = p->right.get();
  }
}

// Appends the symbols at 1-based positions [a, b] of the subtree p.
void collect_range(const Node* p, std::size_t a, std::size_t b, Word& out) {
  while (p && a <= b) {
    std::size_t j = p->left_count;
    if (a < j) collect_range(p->left.get(), a, std::min(b, j - 1), out);
    if (a <= j && j <= b) out.push_back(p->symbol);
    if (b <= j) return;
    a = a > j ? a - j : 1;
    b -= j;
    p = p->right.get();
  }
}

struct Audit {
  int height = 0;
  std::size_t size = 0;
  bool ok = true;
};

Audit audit(const Node* p) {
  if (!p) return {};
  Audit l = audit(p->left.get());
  Audit r = audit(p->right.get());
  Audit out;
  out.height = 1 + std::max(l.height, r.height);
  out.size = 1 + l.size + r.size;
  out.ok = l.ok && r.ok && std::abs(l.height - r.height) <= 1 &&
           p->height == out.height && p->size == out.size &&
           p->left_count == 1 + l.size;
  return out;
}

void check_position(std::size_t pos, std::size_t size) {
  if (pos < 1 || pos > size) {
    throw Error(ErrorCode::kInvalidArgument,
                "position " + std::to_string(pos) + " outside [1, " +
                    std::to_string(size) + "]");
  }
}

void check_range(std::size_t a, std::size_t b, std::size_t size) {
  if (a < 1 || a > b || b > size) {
    throw Error(ErrorCode::kInvalidArgument,
                "range [" + std::to_string(a) + ", " + std::to_string(b) +
                    "] outside [1, " + std::to_string(size) + "]");
  }
}

}  // namespace

EditableWord::EditableWord() = default;
EditableWord::EditableWord(WordView word) : root_(build(word)) {}
EditableWord::EditableWord(std::unique_ptr<Node> root) : root_(std::move(root)) {}
EditableWord::~EditableWord() = default;
EditableWord::EditableWord(EditableWord&&) noexcept = default;
EditableWord& EditableWord::operator=(EditableWord&&) noexcept = default;
EditableWord::EditableWord(const EditableWord& other) : root_(clone(other.root_.get())) {}

EditableWord& EditableWord::operator=(const EditableWord& other) {
  if (this != &other) root_ = clone(other.root_.get());
  return *this;
}

std::size_t EditableWord::size() const { return size_of(root_.get()); }
int EditableWord::height() const { return height_of(root_.get()); }

Symbol EditableWord::get(std::size_t pos) const {
  check_position(pos, size());
  const Node* p = root_.get();
  for (;;) {
    std::size_t j = p->left_count;
    if (pos == j) return p->symbol;
    if (pos < j) {
      p = p->left.get();
    } else {
      pos -= j;
      p = p->right.get();
    }
  }
}

void EditableWord::insert(std::size_t after, WordView piece) {
  if (after > size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "insert position " + std::to_string(after) + " beyond length " +
                    std::to_string(size()));
  }
  if (piece.empty()) return;
  auto [a, b] = split_at(std::move(root_), after);
  root_ = join2(join2(std::move(a), build(piece)), std::move(b));
}

Word EditableWord::delete_range(std::size_t a, std::size_t b) {
  check_range(a, b, size());
  auto [left, rest] = split_at(std::move(root_), a - 1);
  auto [mid, right] = split_at(std::move(rest), b - a + 1);
  Word removed;
  removed.reserve(b - a + 1);
  collect(mid.get(), removed);
  root_ = join2(std::move(left), std::move(right));
  return removed;
}

Word EditableWord::slice(std::size_t a, std::size_t b) const {
  check_range(a, b, size());
  Word out;
  out.reserve(b - a + 1);
  collect_range(root_.get(), a, b, out);
  return out;
}

Word EditableWord::to_word() const {
  Word out;
  out.reserve(size());
  collect(root_.get(), out);
  return out;
}

std::pair<EditableWord, EditableWord> EditableWord::split(std::size_t k) && {
  if (k > size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "split point " + std::to_string(k) + " beyond length " +
                    std::to_string(size()));
  }
  auto [a, b] = split_at(std::move(root_), k);
  return {EditableWord(std::move(a)), EditableWord(std::move(b))};
}

EditableWord EditableWord::join(EditableWord left, EditableWord right) {
  return EditableWord(join2(std::move(left.root_), std::move(right.root_)));
}

bool EditableWord::check_invariants() const { return audit(root_.get()).ok; }

}  // namespace tdcode
