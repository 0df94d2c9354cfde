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

#include "tdcode/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>

#include "tdcode/channel.hpp"
#include "tdcode/codec.hpp"

namespace tdcode {

namespace {

// Plain run-length scans, kept separate from repeats.cpp so that the
// enumerations do not depend on the code under test.
bool has_square_of(WordView w, std::size_t l) {
  if (w.size() < 2 * l) return false;
  std::size_t run = 0;
  for (std::size_t j = 0; j + l < w.size(); ++j) {
    run = w[j] == w[j + l] ? run + 1 : 0;
    if (run >= l) return true;
  }
  return false;
}

bool has_square_at_least(WordView w, std::size_t min_len) {
  for (std::size_t l = std::max<std::size_t>(min_len, 1); 2 * l <= w.size(); ++l) {
    if (has_square_of(w, l)) return true;
  }
  return false;
}

std::uint64_t word_space(unsigned q, std::size_t length, const EnumerationOptions& options) {
  if (q < 2 || q > kMaxAlphabet) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be in [2, 256]");
  }
  std::uint64_t total;
  try {
    total = checked_power(q, length);
  } catch (const Error&) {
    total = ~std::uint64_t{0};
  }
  if (total > options.guard) {
    throw Error(ErrorCode::kGuardExceeded,
                std::to_string(q) + "^" + std::to_string(length) +
                    " words exceed the enumeration guard of " + std::to_string(options.guard));
  }
  return total;
}

Word word_at(std::uint64_t index, unsigned q, std::size_t length) {
  Word w(length, 0);
  for (std::size_t k = length; k-- > 0;) {
    w[k] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return w;
}

// Lexicographic successor in place; false after the last word.
bool advance(Word& w, unsigned q) {
  for (std::size_t k = w.size(); k-- > 0;) {
    if (++w[k] < q) return true;
    w[k] = 0;
  }
  return false;
}

// Runs visit(shard, word) over all q^length words, sharded across threads.
// Each shard gets its own state object; shards are returned in order.
template <typename State, typename Visit>
std::vector<State> sharded(unsigned q, std::size_t length, std::uint64_t total,
                           const EnumerationOptions& options, Visit visit) {
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  const std::uint64_t shards = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1));
  std::vector<State> states(shards);
  auto run = [&](std::uint64_t s) {
    const std::uint64_t begin = total * s / shards;
    const std::uint64_t end = total * (s + 1) / shards;
    if (begin == end) return;
    Word w = word_at(begin, q, length);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      visit(states[s], w);
      advance(w, q);
    }
  };
  if (shards == 1) {
    run(0);
    return states;
  }
  std::vector<std::thread> pool;
  pool.reserve(shards);
  for (std::uint64_t s = 0; s < shards; ++s) pool.emplace_back(run, s);
  for (auto& t : pool) t.join();
  return states;
}

Percentiles summarize(std::vector<double> samples) {
  Percentiles p;
  if (samples.empty()) return p;
  std::sort(samples.begin(), samples.end());
  auto rank = [&](double frac) {
    auto idx = static_cast<std::size_t>(std::ceil(frac * samples.size()));
    return samples[std::clamp<std::size_t>(idx, 1, samples.size()) - 1];
  };
  p.p50 = rank(0.50);
  p.p90 = rank(0.90);
  p.p99 = rank(0.99);
  p.max = samples.back();
  return p;
}

}  // namespace

BadWordCount count_bad_words(unsigned q, std::size_t length, std::size_t min_length,
                             const EnumerationOptions& options) {
  if (min_length < 1) throw Error(ErrorCode::kInvalidArgument, "K must be positive");
  BadWordCount out;
  out.q = q;
  out.length = length;
  out.min_length = min_length;
  out.words = word_space(q, length, options);
  auto counts = sharded<std::uint64_t>(q, length, out.words, options,
                                       [&](std::uint64_t& bad, const Word& w) {
                                         if (has_square_at_least(w, min_length)) ++bad;
                                       });
  for (auto c : counts) out.bad += c;
  out.bound = static_cast<double>(length) *
              std::pow(static_cast<double>(q), static_cast<double>(length) + 1.0 -
                                                   static_cast<double>(min_length));
  out.bound_holds = static_cast<double>(out.bad) <= out.bound;
  return out;
}

Code0Count enumerate_code0(unsigned q, std::size_t length, std::size_t min_length,
                           bool list_members, const EnumerationOptions& options) {
  if (min_length < 1) throw Error(ErrorCode::kInvalidArgument, "K must be positive");
  if (length < 1) throw Error(ErrorCode::kInvalidArgument, "length must be positive");
  struct Shard {
    std::uint64_t count = 0;
    std::vector<Word> members;
  };
  Code0Count out;
  out.q = q;
  out.length = length;
  out.min_length = min_length;
  out.words = word_space(q, length, options);
  auto shards = sharded<Shard>(q, length, out.words, options, [&](Shard& s, const Word& w) {
    if (has_square_at_least(w, min_length)) return;
    ++s.count;
    if (list_members) s.members.push_back(w);
  });
  for (auto& s : shards) {
    out.count += s.count;
    for (auto& m : s.members) out.members.push_back(std::move(m));
  }
  const double n = static_cast<double>(length - 1);
  const double qd = static_cast<double>(q);
  out.bound = std::pow(qd, static_cast<double>(length)) *
              (1.0 - n * std::pow(qd, 1.0 - static_cast<double>(min_length)));
  out.bound_holds = static_cast<double>(out.count) >= out.bound;
  return out;
}

std::uint64_t BallReport::collisions() const {
  std::uint64_t total = 0;
  for (const auto& c : checks) total += c.collisions;
  return total;
}

BallReport verify_ball_disjointness(unsigned q, std::size_t n,
                                    std::span<const std::size_t> lengths,
                                    const EnumerationOptions& options) {
  BallReport report;
  report.q = q;
  report.n = n;
  const std::uint64_t total = word_space(q, n, options);
  for (std::size_t l : lengths) {
    if (l < 1 || l > n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplication length " + std::to_string(l) + " outside [1, " +
                      std::to_string(n) + "]");
    }
    BallCheck check;
    check.length = l;
    // image -> index of the first preimage that produced it
    std::unordered_map<std::string, std::uint64_t> owner;
    owner.reserve(total * (n - l + 1));
    Word x(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx, advance(x, q)) {
      if (has_square_of(x, l)) continue;
      ++check.preimages;
      for (std::size_t i = 0; i + l <= n; ++i) {
        Word image = x;
        image.insert(image.begin() + static_cast<std::ptrdiff_t>(i + l),
                     x.begin() + static_cast<std::ptrdiff_t>(i),
                     x.begin() + static_cast<std::ptrdiff_t>(i + l));
        std::string key(image.begin(), image.end());
        auto [it, inserted] = owner.try_emplace(std::move(key), idx);
        if (inserted) {
          ++check.images;
        } else if (it->second != idx) {
          ++check.collisions;
          if (!check.witness) {
            check.witness = BallCheck::Witness{image, word_at(it->second, q, n), x};
          }
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

RoundtripReport roundtrip_suite(const CodeParams& params, std::uint64_t trials,
                                std::uint64_t seed, Sweep sweep) {
  using Clock = std::chrono::steady_clock;
  auto micros = [](Clock::duration d) {
    return std::chrono::duration<double, std::micro>(d).count();
  };

  RoundtripReport report;
  report.q = params.q;
  report.n = params.n;
  report.trials = trials;
  report.seed = seed;
  report.sweep = sweep;

  const std::size_t total = params.codeword_length();
  const std::size_t K = params.threshold;
  constexpr int kSampledPerMessage = 4;

  Rng rng(seed);
  std::vector<double> enc_t, dec_t, cor_t;
  enc_t.reserve(trials);
  dec_t.reserve(trials);

  auto fail = [&](std::string check, const Word& x, std::optional<Duplication> dup,
                  std::string detail) {
    report.failure = RoundtripReport::Failure{std::move(check), x, dup, std::move(detail)};
  };

  auto check_correction = [&](const Word& x, const Word& cw, Duplication dup) {
    Word corrupted = apply_duplication(cw, dup);
    auto t0 = Clock::now();
    Word fixed;
    try {
      fixed = correct(corrupted, params);
    } catch (const Error& e) {
      fail("correct", x, dup, e.what());
      return false;
    }
    cor_t.push_back(micros(Clock::now() - t0));
    ++report.corrections;
    if (fixed != cw) {
      fail("correct", x, dup, "corrected word differs from the codeword");
      return false;
    }
    return true;
  };

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const Word x = rng.word(params.n, params.q);
    Word cw;
    try {
      auto t0 = Clock::now();
      auto trace = encode_traced(x, params);
      enc_t.push_back(micros(Clock::now() - t0));
      report.encoder_steps += trace.steps.size();
      cw = std::move(trace.codeword);
    } catch (const Error& e) {
      fail("encode", x, std::nullopt, e.what());
      break;
    }
    ++report.messages;
    if (cw.size() != total) {
      fail("length", x, std::nullopt, "codeword length " + std::to_string(cw.size()));
      break;
    }
    if (auto sq = find_leftmost_long(cw, K)) {
      fail("square_free", x, sq, "codeword contains a long square");
      break;
    }
    try {
      auto t0 = Clock::now();
      Word back = decode(cw, params);
      dec_t.push_back(micros(Clock::now() - t0));
      if (back != x) {
        fail("decode", x, std::nullopt, "decode(encode(x)) != x");
        break;
      }
    } catch (const Error& e) {
      fail("decode", x, std::nullopt, e.what());
      break;
    }

    bool ok = true;
    if (sweep == Sweep::kFull) {
      for (std::size_t l = K; ok && l <= total; ++l) {
        for (std::size_t i = 0; ok && i + l <= total; ++i) {
          ok = check_correction(x, cw, Duplication{i, l});
        }
      }
    } else if (sweep == Sweep::kSampled && total >= K) {
      ChannelSpec spec;
      for (int k = 0; ok && k < kSampledPerMessage; ++k) {
        ok = check_correction(x, cw, random_duplication(cw, spec, params, rng).second);
      }
    }
    if (!ok) break;
  }

  report.encode_us = summarize(std::move(enc_t));
  report.decode_us = summarize(std::move(dec_t));
  report.correct_us = summarize(std::move(cor_t));
  return report;
}

ConverseReport converse_gap(unsigned q, std::size_t n, double c) {
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "alphabet size must be at least 2");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "length must be at least 2");
  if (!(c > 0)) throw Error(ErrorCode::kInvalidArgument, "c must be positive");
  ConverseReport r;
  r.q = q;
  r.n = n;
  r.c = c;
  const double log_q = std::log(static_cast<double>(q));
  r.log_q_n = std::log(static_cast<double>(n)) / log_q;
  r.length = r.log_q_n - c;
  r.bound = r.log_q_n - r.length - 1.0;
  r.refined_bound = r.bound + std::log(static_cast<double>(q - 1)) / log_q;
  r.exceeds_one = r.bound > 1.0;
  return r;
}

}  // namespace tdcode
