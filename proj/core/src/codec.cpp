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

#include "tdcode/codec.hpp"

#include <algorithm>
#include <string>

#include "tdcode/seqword.hpp"
#include "tdcode/windows.hpp"

namespace tdcode {

namespace {

void check_message(WordView message, const CodeParams& params) {
  if (message.size() != params.n) {
    throw Error(ErrorCode::kMalformedInput,
                "message has length " + std::to_string(message.size()) + ", expected " +
                    std::to_string(params.n));
  }
  check_symbols(message, params.q);
}

[[noreturn]] void defect(const std::string& what) {
  throw Error(ErrorCode::kInternalDefect, "encoder invariant violated: " + what);
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedCodeword, "malformed codeword: " + what);
}

// The working word of the encoder: the sequence itself and the counter trie
// over its windows, updated together.
class WorkingWord {
 public:
  WorkingWord(WordView word, const CodeParams& params, bool rebuild)
      : params_(params), word_(word), index_(WindowIndex::build(word, params)),
        rebuild_(rebuild) {}

  std::size_t size() const { return word_.size(); }
  Word materialize() const { return word_.to_word(); }

  void remove(WordView snapshot, std::size_t a, std::size_t b) {
    index_.apply_delete(snapshot, a, b);
    word_.delete_range(a, b);
  }

  void append(WordView piece) {
    if (piece.empty()) return;
    Word tail;
    const std::size_t keep = std::min(word_.size(), params_.window - 1);
    if (keep > 0) tail = word_.slice(word_.size() - keep + 1, word_.size());
    index_.apply_append(tail, piece);
    word_.append(piece);
  }

  Word absent_window() {
    if (rebuild_) index_ = WindowIndex::build(word_.to_word(), params_);
    return index_.find_absent();
  }

 private:
  const CodeParams& params_;
  EditableWord word_;
  WindowIndex index_;
  bool rebuild_;
};

}  // namespace

EncodeTrace encode_traced(WordView message, const CodeParams& params,
                          const EncodeOptions& options) {
  check_message(message, params);
  const std::size_t total = params.codeword_length();
  const std::size_t L = params.window;
  const std::size_t K = params.threshold;

  EncodeTrace trace;
  trace.codeword.assign(message.begin(), message.end());
  trace.codeword.push_back(0);

  auto dup = find_leftmost_long(trace.codeword, K);
  if (!dup) return trace;

  // Built once, on the first square found, then updated in place.
  WorkingWord work(trace.codeword, params, options.rebuild_windows);
  const std::size_t max_steps = total / K;

  while (dup) {
    if (trace.steps.size() >= max_steps) defect("more than (n+1)/K removal steps");
    const auto [offset, length] = *dup;
    EncodeStep step;
    step.removed = *dup;
    step.full_windows = (length - 2 * L - 1) / L;
    step.zero_padding = (length - 1) % L;
    if (step.full_windows < 2) defect("filler needs at least two absent windows");
    if (2 * L + step.full_windows * L + step.zero_padding + 1 != length) {
      defect("data block length differs from the removed square");
    }

    // Drop the left copy, then append i, the filler, l and the flag 1.
    work.remove(trace.codeword, offset + 1, offset + length);
    work.append(to_digits(offset, params).digits);
    auto add_absent = [&] {
      Word w = work.absent_window();
      step.fillers.emplace_back(w, work.size());
      work.append(w);
    };
    for (std::size_t k = 1; k < step.full_windows; ++k) add_absent();
    work.append(Word(step.zero_padding, 0));
    add_absent();
    work.append(to_digits(length, params).digits);
    work.append(Word{1});

    if (work.size() != total) defect("working word length changed");
    trace.steps.push_back(std::move(step));
    trace.codeword = work.materialize();
    dup = find_leftmost_long(trace.codeword, K);
  }
  return trace;
}

Word encode(WordView message, const CodeParams& params, const EncodeOptions& options) {
  return encode_traced(message, params, options).codeword;
}

Word decode(WordView codeword, const CodeParams& params) {
  const std::size_t total = params.codeword_length();
  if (codeword.size() != total) {
    throw Error(ErrorCode::kMalformedInput,
                "codeword has length " + std::to_string(codeword.size()) + ", expected " +
                    std::to_string(total));
  }
  check_symbols(codeword, params.q);
  const std::size_t L = params.window;
  const std::size_t K = params.threshold;
  const std::size_t max_steps = total / K;

  EditableWord word(codeword);
  for (std::size_t steps = 0;; ++steps) {
    const std::size_t len = word.size();
    const Symbol flag = word.get(len);
    if (flag == 0) {
      word.delete_range(len, len);
      return word.to_word();
    }
    if (flag != 1) malformed("flag symbol " + std::to_string(flag) + " is neither 0 nor 1");
    if (steps >= max_steps) malformed("more data blocks than the word can hold");

    const std::uint64_t length = from_digits(word.slice(len - L, len - 1), params);
    if (length < K || length > len) {
      malformed("block length " + std::to_string(length) + " outside [" +
                std::to_string(K) + ", " + std::to_string(len) + "]");
    }
    auto [rest, block] = std::move(word).split(len - length);
    const Word head = block.slice(1, L);
    const std::uint64_t offset = from_digits(head, params);
    if (offset + length > rest.size()) {
      malformed("square at offset " + std::to_string(offset) + " with length " +
                std::to_string(length) + " exceeds the remaining " +
                std::to_string(rest.size()) + " symbols");
    }
    const Word copy = rest.slice(offset + 1, offset + length);
    rest.insert(offset + length, copy);
    word = std::move(rest);
  }
}

Word correct(WordView received, const CodeParams& params, const CorrectOptions& options) {
  check_symbols(received, params.q);
  const std::size_t total = params.codeword_length();
  if (received.size() < total) {
    throw Error(ErrorCode::kNotCorrectable,
                "word of length " + std::to_string(received.size()) +
                    " is shorter than a codeword (" + std::to_string(total) + ")");
  }
  const std::size_t extra = received.size() - total;
  if (extra == 0) return Word(received.begin(), received.end());
  const std::size_t min_length = std::max<std::size_t>(options.min_length.value_or(params.threshold), 1);
  if (extra < min_length) {
    throw Error(ErrorCode::kNotCorrectable,
                "excess length " + std::to_string(extra) + " is below the threshold " +
                    std::to_string(min_length));
  }
  auto start = find_square_with_length(received, extra);
  if (!start) {
    throw Error(ErrorCode::kNotCorrectable,
                "no square with half-length " + std::to_string(extra) + " found");
  }
  Word restored(received.begin(), received.begin() + static_cast<std::ptrdiff_t>(*start));
  restored.insert(restored.end(),
                  received.begin() + static_cast<std::ptrdiff_t>(*start + extra),
                  received.end());
  if (auto left = find_leftmost_long(restored, min_length)) {
    throw Error(ErrorCode::kVerificationFailed,
                "restored word still has a square at offset " + std::to_string(left->offset) +
                    " with length " + std::to_string(left->length));
  }
  return restored;
}

bool is_codeword(WordView word, const CodeParams& params) {
  if (word.size() != params.codeword_length()) return false;
  try {
    return encode(decode(word, params), params) == Word(word.begin(), word.end());
  } catch (const Error&) {
    return false;
  }
}

}  // namespace tdcode
