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

#include "tdcode/windows.hpp"

#include <algorithm>
#include <string>

namespace tdcode {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

}  // namespace

WindowIndex::WindowIndex(unsigned q, std::size_t depth, Storage storage)
    : q_(q), depth_(depth) {
  if (q < 2 || q > kMaxAlphabet || depth < 1) {
    throw Error(ErrorCode::kInvalidArgument, "window index needs q in [2, 256] and depth >= 1");
  }
  std::uint64_t leaves = checked_power(q, depth);
  dense_ = storage == Storage::kDense ||
           (storage == Storage::kAuto && leaves <= kDenseLimit);
  thresholds_.resize(depth + 1);
  for (std::size_t level = 0; level <= depth; ++level) {
    thresholds_[level] = checked_power(q, depth - level);
  }
  if (dense_) {
    dense_levels_.resize(depth + 1);
    std::uint64_t width = 1;
    for (std::size_t level = 0; level <= depth; ++level) {
      dense_levels_[level].assign(width, 0);
      width *= q;
    }
  } else {
    sparse_levels_.resize(depth + 1);
  }
}

WindowIndex WindowIndex::build(WordView word, const CodeParams& params, Storage storage) {
  return build(word, params.q, params.window, storage);
}

WindowIndex WindowIndex::build(WordView word, unsigned q, std::size_t depth, Storage storage) {
  WindowIndex index(q, depth, storage);
  index.add_all(word);
  return index;
}

std::uint64_t WindowIndex::counter(std::size_t level, std::uint64_t key) const {
  if (dense_) return dense_levels_[level][key];
  auto it = sparse_levels_[level].find(key);
  return it == sparse_levels_[level].end() ? 0 : it->second;
}

void WindowIndex::adjust(WordView window, bool increment) {
  if (window.size() != depth_) {
    throw Error(ErrorCode::kInvalidArgument,
                "window length " + std::to_string(window.size()) + " differs from depth " +
                    std::to_string(depth_));
  }
  std::uint64_t leaf = 0;
  for (Symbol s : window) {
    if (s >= q_) throw Error(ErrorCode::kInvalidArgument, "window symbol out of range");
    leaf = leaf * q_ + s;
  }
  if (!increment && counter(depth_, leaf) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "removing a window that is not indexed");
  }
  // Walk from the leaf up to the root; the level-m ancestor key is the leaf
  // key with its last depth-m digits dropped.
  std::uint64_t key = leaf;
  for (std::size_t level = depth_ + 1; level-- > 0;) {
    if (dense_) {
      auto& c = dense_levels_[level][key];
      c = increment ? c + 1 : c - 1;
    } else {
      auto& map = sparse_levels_[level];
      if (increment) {
        ++map[key];
      } else {
        auto it = map.find(key);
        if (--it->second == 0) map.erase(it);
      }
    }
    key /= q_;
  }
}

void WindowIndex::add_window(WordView window) { adjust(window, true); }
void WindowIndex::remove_window(WordView window) { adjust(window, false); }

void WindowIndex::add_all(WordView word) {
  for (std::size_t s = 0; s + depth_ <= word.size(); ++s) {
    adjust(word.subspan(s, depth_), true);
  }
}

void WindowIndex::apply_append(WordView before, WordView suffix) {
  std::size_t keep = std::min(before.size(), depth_ - 1);
  Word buffer(before.end() - static_cast<std::ptrdiff_t>(keep), before.end());
  buffer.insert(buffer.end(), suffix.begin(), suffix.end());
  add_all(buffer);
}

void WindowIndex::apply_delete(WordView before, std::size_t a, std::size_t b) {
  const std::size_t m = before.size();
  if (a < 1 || a > b || b > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "delete range [" + std::to_string(a) + ", " + std::to_string(b) +
                    "] outside [1, " + std::to_string(m) + "]");
  }
  const std::size_t first = a > depth_ ? a - depth_ + 1 : 1;
  if (m >= depth_) {
    const std::size_t last = std::min(b, m - depth_ + 1);
    for (std::size_t s = first; s <= last; ++s) {
      adjust(before.subspan(s - 1, depth_), false);
    }
  }
  Word junction(before.begin() + static_cast<std::ptrdiff_t>(first - 1),
                before.begin() + static_cast<std::ptrdiff_t>(a - 1));
  const std::size_t right_end = std::min(m, b + depth_ - 1);
  junction.insert(junction.end(), before.begin() + static_cast<std::ptrdiff_t>(b),
                  before.begin() + static_cast<std::ptrdiff_t>(right_end));
  add_all(junction);
}

Word WindowIndex::find_absent() const {
  if (total() >= thresholds_[0]) {
    throw Error(ErrorCode::kInternalDefect,
                "all " + std::to_string(thresholds_[0]) + " windows are present");
  }
  Word out;
  out.reserve(depth_);
  std::uint64_t key = 0;
  for (std::size_t level = 0; level < depth_; ++level) {
    bool found = false;
    for (unsigned d = 0; d < q_; ++d) {
      std::uint64_t child = key * q_ + d;
      if (counter(level + 1, child) < thresholds_[level + 1]) {
        out.push_back(static_cast<Symbol>(d));
        key = child;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kInternalDefect,
                  "absent-window descent stuck at level " + std::to_string(level));
    }
  }
  return out;
}

std::uint64_t WindowIndex::count(WordView prefix) const {
  if (prefix.size() > depth_) {
    throw Error(ErrorCode::kInvalidArgument, "prefix longer than the trie depth");
  }
  std::uint64_t key = 0;
  for (Symbol s : prefix) {
    if (s >= q_) throw Error(ErrorCode::kInvalidArgument, "prefix symbol out of range");
    key = key * q_ + s;
  }
  return counter(prefix.size(), key);
}

bool WindowIndex::check_sums() const {
  if (dense_) {
    for (std::size_t level = 0; level < depth_; ++level) {
      const auto& parents = dense_levels_[level];
      const auto& children = dense_levels_[level + 1];
      for (std::uint64_t key = 0; key < parents.size(); ++key) {
        std::uint64_t sum = 0;
        for (unsigned d = 0; d < q_; ++d) sum += children[key * q_ + d];
        if (sum != parents[key]) return false;
      }
    }
    return true;
  }
  for (std::size_t level = 0; level < depth_; ++level) {
    std::unordered_map<std::uint64_t, std::uint64_t> sums;
    for (const auto& [key, c] : sparse_levels_[level + 1]) sums[key / q_] += c;
    if (sums.size() != sparse_levels_[level].size()) return false;
    for (const auto& [key, c] : sparse_levels_[level]) {
      auto it = sums.find(key);
      if (it == sums.end() || it->second != c) return false;
    }
  }
  return true;
}

bool operator==(const WindowIndex& a, const WindowIndex& b) {
  if (a.q_ != b.q_ || a.depth_ != b.depth_) return false;
  if (a.dense_ && b.dense_) return a.dense_levels_ == b.dense_levels_;
  if (!a.dense_ && !b.dense_) return a.sparse_levels_ == b.sparse_levels_;
  const WindowIndex& dense = a.dense_ ? a : b;
  const WindowIndex& sparse = a.dense_ ? b : a;
  for (std::size_t level = 0; level <= dense.depth_; ++level) {
    const auto& counters = dense.dense_levels_[level];
    std::size_t nonzero = 0;
    for (std::uint64_t key = 0; key < counters.size(); ++key) {
      if (counters[key] == 0) continue;
      ++nonzero;
      if (sparse.counter(level, key) != counters[key]) return false;
    }
    if (nonzero != sparse.sparse_levels_[level].size()) return false;
  }
  return true;
}

}  // namespace tdcode
