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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdcode/core.hpp"
#include "tdcode/repeats.hpp"

namespace tdcode {

// Brute-force checkers for the combinatorial facts the code relies on. All
// enumerations walk the full word space Z_q^n, split into contiguous shards
// that are counted independently and summed.

struct EnumerationOptions {
  /// Largest word space (q^length) an enumeration may walk.
  std::uint64_t guard = std::uint64_t{1} << 26;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Words of a given length that contain a square with half >= min_length,
/// against the union bound length * q^(length + 1 - min_length).
struct BadWordCount {
  unsigned q = 0;
  std::size_t length = 0;
  std::size_t min_length = 0;
  std::uint64_t words = 0;
  std::uint64_t bad = 0;
  double bound = 0;
  bool bound_holds = false;
};

BadWordCount count_bad_words(unsigned q, std::size_t length, std::size_t min_length,
                             const EnumerationOptions& options = {});

/// The code of all words of length n+1 without squares of half >= min_length,
/// against the lower bound q^(n+1) * (1 - n * q^(1 - min_length)).
struct Code0Count {
  unsigned q = 0;
  std::size_t length = 0;
  std::size_t min_length = 0;
  std::uint64_t words = 0;
  std::uint64_t count = 0;
  double bound = 0;
  bool bound_holds = false;
  std::vector<Word> members;  // filled only when requested
};

Code0Count enumerate_code0(unsigned q, std::size_t length, std::size_t min_length,
                           bool list_members = false, const EnumerationOptions& options = {});

/// Disjointness of single-duplication images. For each half-length l, every
/// word of length n with no square of half exactly l is mapped through all
/// tau_{i,l}; an image reached from two different words is a collision.
struct BallCheck {
  std::size_t length = 0;  // l
  std::uint64_t preimages = 0;
  std::uint64_t images = 0;
  std::uint64_t collisions = 0;
  struct Witness {
    Word image;
    Word first;
    Word second;
  };
  std::optional<Witness> witness;
};

struct BallReport {
  unsigned q = 0;
  std::size_t n = 0;
  std::vector<BallCheck> checks;
  std::uint64_t collisions() const;
};

BallReport verify_ball_disjointness(unsigned q, std::size_t n,
                                    std::span<const std::size_t> lengths,
                                    const EnumerationOptions& options = {});

enum class Sweep {
  kNone,     // encode/decode only
  kSampled,  // a few seeded random corruptions per message
  kFull,     // every (i, l) with l >= K and i + l <= n + 1
};

struct Percentiles {
  double p50 = 0, p90 = 0, p99 = 0, max = 0;  // microseconds
};

struct RoundtripReport {
  unsigned q = 0;
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Sweep sweep = Sweep::kSampled;

  std::uint64_t messages = 0;
  std::uint64_t corrections = 0;
  std::uint64_t encoder_steps = 0;
  Percentiles encode_us, decode_us, correct_us;

  struct Failure {
    std::string check;
    Word message;
    std::optional<Duplication> corruption;
    std::string detail;
  };
  std::optional<Failure> failure;

  bool passed() const { return !failure.has_value(); }
};

/// End-to-end check over `trials` seeded random messages: codeword length,
/// square-freeness above the threshold, decode(encode(x)) == x and
/// correction of duplications. Stops at the first failing witness.
RoundtripReport roundtrip_suite(const CodeParams& params, std::uint64_t trials,
                                std::uint64_t seed, Sweep sweep = Sweep::kSampled);

/// Redundancy lower bound log_q n - l - 1 for codes correcting one
/// duplication of length l, evaluated at l = log_q n - c.
struct ConverseReport {
  unsigned q = 0;
  std::size_t n = 0;
  double c = 0;
  double log_q_n = 0;
  double length = 0;         // l = log_q n - c
  double bound = 0;          // log_q n - l - 1
  double refined_bound = 0;  // log_q n + log_q (q - 1) - l - 1
  bool exceeds_one = false;  // bound > 1
};

ConverseReport converse_gap(unsigned q, std::size_t n, double c);

}  // namespace tdcode
