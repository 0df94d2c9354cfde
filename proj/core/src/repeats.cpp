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

#include "tdcode/repeats.hpp"

#include <algorithm>
#include <vector>

namespace tdcode {

namespace {

constexpr int kSeparator = -1;

void z_function(const std::vector<int>& s, std::vector<std::size_t>& z) {
  const std::size_t n = s.size();
  z.assign(n, 0);
  if (n == 0) return;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = 0;
    if (i < r) k = std::min(r - i, z[i - l]);
    while (i + k < n && s[k] == s[i + k]) ++k;
    z[i] = k;
    if (i + k > r) {
      l = i;
      r = i + k;
    }
  }
}

struct Workspace {
  std::vector<int> forward;
  std::vector<int> backward;
  std::vector<std::size_t> z_forward;
  std::vector<std::size_t> z_backward;
};

using Candidate = std::optional<Duplication>;

Candidate better(const Candidate& a, const Candidate& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Leftmost square with half >= min_len that contains positions t and t+1 of
// seg. Squares are classified by which copy holds t: if t is in the left
// copy the anchor is t itself, otherwise the anchor is t - l.
Candidate crossing(WordView seg, std::size_t t, std::size_t min_len, Workspace& ws) {
  const std::size_t n = seg.size();

  // forward = seg[t..n) # seg[0..n): z gives LCP(seg[t..], seg[t+l..]) at l,
  // and LCP(seg[t..], seg[c..]) at (n - t) + 1 + c.
  ws.forward.clear();
  ws.forward.reserve(2 * n + 1 - t);
  for (std::size_t k = t; k < n; ++k) ws.forward.push_back(seg[k]);
  ws.forward.push_back(kSeparator);
  for (std::size_t k = 0; k < n; ++k) ws.forward.push_back(seg[k]);
  z_function(ws.forward, ws.z_forward);

  // backward = rev(seg[0..t)) # rev(seg[0..n)): z at l gives the common
  // suffix of seg[0..t) and seg[0..t-l); at n + 1 - l it gives the common
  // suffix of seg[0..t) and seg[0..t+l).
  ws.backward.clear();
  ws.backward.reserve(t + n + 1);
  for (std::size_t k = t; k-- > 0;) ws.backward.push_back(seg[k]);
  ws.backward.push_back(kSeparator);
  for (std::size_t k = n; k-- > 0;) ws.backward.push_back(seg[k]);
  z_function(ws.backward, ws.z_backward);

  Candidate best;
  // t in the left copy.
  for (std::size_t l = min_len; l + t < n; ++l) {
    const std::size_t ahead = ws.z_forward[l];
    if (ahead == 0) continue;
    const std::size_t behind = std::min(ws.z_backward[n + 1 - l], l - 1);
    const std::size_t start = t - behind;
    if (start + l <= t + ahead) {
      best = better(best, Duplication{start, l});
    }
  }
  // t in the right copy; the matching position t - l is in the left copy.
  for (std::size_t l = min_len; l <= t; ++l) {
    const std::size_t anchor = t - l;
    const std::size_t ahead = ws.z_forward[(n - t) + 1 + anchor];
    if (ahead == 0) continue;
    const std::size_t behind = std::min(ws.z_backward[l], l - 1);
    const std::size_t start = anchor - behind;
    if (start + 2 * l <= t + ahead) {
      best = better(best, Duplication{start, l});
    }
  }
  return best;
}

Candidate leftmost(WordView word, std::size_t a, std::size_t b, std::size_t min_len,
                   Workspace& ws) {
  if (b - a < 2 * min_len) return std::nullopt;
  const std::size_t m = a + (b - a) / 2;
  Candidate best = leftmost(word, a, m, min_len, ws);
  Candidate cross = crossing(word.subspan(a, b - a), m - 1 - a, min_len, ws);
  if (cross) cross->offset += a;
  best = better(best, cross);
  // Squares wholly inside [m, b) start at or after m, so they cannot beat a
  // square that starts in [a, m).
  if (best) return best;
  return leftmost(word, m, b, min_len, ws);
}

}  // namespace

std::optional<Duplication> find_leftmost_long(WordView word, std::size_t min_length) {
  min_length = std::max<std::size_t>(min_length, 1);
  // Reused across calls; the encoder searches the whole word once per step.
  thread_local Workspace ws;
  return leftmost(word, 0, word.size(), min_length, ws);
}

bool is_dup_free(WordView word, std::size_t min_length) {
  return !find_leftmost_long(word, min_length).has_value();
}

std::optional<std::size_t> find_square_with_length(WordView word, std::size_t length) {
  if (length == 0) {
    throw Error(ErrorCode::kInvalidArgument, "square half-length must be positive");
  }
  if (word.size() < 2 * length) return std::nullopt;
  std::size_t run = 0;
  for (std::size_t j = 0; j + length < word.size(); ++j) {
    run = word[j] == word[j + length] ? run + 1 : 0;
    if (run == length) return j + 1 - length;
  }
  return std::nullopt;
}

}  // namespace tdcode
