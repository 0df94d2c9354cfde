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

#include "tdcode_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdcode/analysis.hpp"
#include "tdcode/channel.hpp"
#include "tdcode/codec.hpp"

namespace tdcode::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "tdcode/1";

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kMalformedInput:
    case ErrorCode::kMalformedCodeword:
    case ErrorCode::kNotCorrectable:
      return kExitMalformed;
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kInternalDefect:
      return kExitVerification;
    case ErrorCode::kGuardExceeded:
      return kExitGuard;
  }
  return kExitVerification;
}

// Flags shared by every subcommand.
struct Common {
  unsigned q = 0;
  std::size_t n = 0;
  std::optional<std::string> word;
  std::optional<std::string> in_file;
  std::optional<std::string> out_file;
  bool json = false;
  std::uint64_t max_words = EnumerationOptions{}.guard;
  unsigned threads = 0;
};

// What a command hands back: a JSON document and its plain-text rendering.
// A nonzero status turns into a verification failure after printing.
struct Result {
  Json doc;
  std::string text;
  std::optional<std::string> failed;
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string read_input(const Common& c, std::istream& in) {
  if (c.word) return *c.word;
  if (c.in_file) {
    std::ifstream f(*c.in_file);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot open " + *c.in_file);
    return std::string(std::istreambuf_iterator<char>(f), {});
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Word input_word(const Common& c, std::istream& in) {
  return parse_word(read_input(c, in), c.q);
}

EnumerationOptions enum_options(const Common& c) {
  return EnumerationOptions{c.max_words, c.threads};
}

Json percentiles(const Percentiles& p) {
  return Json{{"p50", p.p50}, {"p90", p.p90}, {"p99", p.p99}, {"max", p.max}};
}

std::string percentile_text(const Percentiles& p) {
  return "p50=" + fmt(p.p50) + " p90=" + fmt(p.p90) + " p99=" + fmt(p.p99) +
         " max=" + fmt(p.max);
}

Sweep parse_sweep(const std::string& s) {
  if (s == "none") return Sweep::kNone;
  if (s == "sampled") return Sweep::kSampled;
  if (s == "full") return Sweep::kFull;
  throw Error(ErrorCode::kInvalidArgument, "unknown sweep mode " + s);
}

std::string sweep_name(Sweep s) {
  switch (s) {
    case Sweep::kNone:
      return "none";
    case Sweep::kSampled:
      return "sampled";
    case Sweep::kFull:
      return "full";
  }
  return "?";
}

// Bench inputs. The adversarial pattern has a random first half and a
// periodic second half whose period is a random block of length K, so the
// encoder keeps finding long squares deep into the word.
Word bench_message(const std::string& pattern, const CodeParams& p, Rng& rng) {
  if (pattern == "zeros") return Word(p.n, 0);
  if (pattern == "random") return rng.word(p.n, p.q);
  if (pattern == "adversarial") {
    Word w = rng.word(p.n / 2, p.q);
    const Word block = rng.word(std::max<std::size_t>(p.threshold, 1), p.q);
    while (w.size() < p.n) w.push_back(block[(w.size() - p.n / 2) % block.size()]);
    return w;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown pattern " + pattern);
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  return v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Single long tandem-duplication-correcting code toolkit", "tdcode"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tdcode 0.1.0");

  Common c;
  auto add_io = [&](CLI::App* sub, bool needs_n) {
    sub->add_option("--q", c.q, "Alphabet size (2..256)")->required();
    auto* n = sub->add_option("--n", c.n, "Message length");
    if (needs_n) n->required();
    sub->add_option("--word", c.word, "Input word (otherwise --in or stdin)");
    sub->add_option("--in", c.in_file, "Read the input word from a file");
    sub->add_option("--out", c.out_file, "Write the result to a file");
    sub->add_flag("--json", c.json, "Emit the JSON report (schema tdcode/1)");
  };
  auto add_enum = [&](CLI::App* sub) {
    sub->add_option("--max-words", c.max_words, "Largest word space to enumerate");
    sub->add_option("--threads", c.threads, "Worker threads (0 = hardware)");
  };

  std::function<Result()> action;

  auto* enc = app.add_subcommand("encode", "Encode an n-symbol message");
  add_io(enc, true);
  enc->callback([&] {
    action = [&] {
      const auto p = derive_params(c.q, c.n);
      auto trace = encode_traced(input_word(c, in), p);
      Result r{header("encode"), format_word(trace.codeword, c.q), std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["codeword"] = r.text;
      r.doc["steps"] = trace.steps.size();
      return r;
    };
  });

  auto* dec = app.add_subcommand("decode", "Decode an (n+1)-symbol codeword");
  add_io(dec, true);
  dec->callback([&] {
    action = [&] {
      const auto p = derive_params(c.q, c.n);
      Word x = decode(input_word(c, in), p);
      Result r{header("decode"), format_word(x, c.q), std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["message"] = r.text;
      return r;
    };
  });

  std::uint64_t seed = 0;
  std::optional<std::size_t> dup_i, dup_l, l_min, l_max;
  auto* cor = app.add_subcommand("corrupt", "Apply one tandem duplication");
  add_io(cor, true);
  cor->add_option("--seed", seed, "Channel seed");
  cor->add_option("--i", dup_i, "Offset of the duplicated factor (0-based, needs --l)");
  cor->add_option("--l", dup_l, "Duplication length");
  cor->add_option("--l-min", l_min, "Smallest random length (default K)");
  cor->add_option("--l-max", l_max, "Largest random length (default word length)");
  cor->callback([&] {
    action = [&] {
      const auto p = derive_params(c.q, c.n);
      const Word w = input_word(c, in);
      check_symbols(w, c.q);
      if (dup_i && !dup_l) throw Error(ErrorCode::kInvalidArgument, "--i needs --l");
      Word y;
      Duplication d;
      if (dup_i) {
        d = Duplication{*dup_i, *dup_l};
        y = apply_duplication(w, d);
      } else {
        ChannelSpec spec{seed, dup_l ? dup_l : l_min, dup_l ? dup_l : l_max};
        std::tie(y, d) = random_duplication(w, spec, p);
      }
      err << "applied i=" << d.offset << " l=" << d.length << " start=" << d.offset + 1 << "\n";
      Result r{header("corrupt"), format_word(y, c.q), std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["word"] = r.text;
      r.doc["i"] = d.offset;
      r.doc["l"] = d.length;
      r.doc["start"] = d.offset + 1;
      return r;
    };
  });

  std::optional<std::size_t> min_length;
  auto* fix = app.add_subcommand("correct", "Remove one long tandem duplication");
  add_io(fix, true);
  fix->add_option("--min-length", min_length,
                  "Accept duplications shorter than K, down to this length");
  fix->callback([&] {
    action = [&] {
      const auto p = derive_params(c.q, c.n);
      const Word y = input_word(c, in);
      Word fixed = correct(y, p, CorrectOptions{min_length});
      Result r{header("correct"), format_word(fixed, c.q), std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["codeword"] = r.text;
      r.doc["removed"] = y.size() - fixed.size();
      return r;
    };
  });

  std::uint64_t trials = 100;
  std::string sweep = "sampled";
  bool no_timing = false;
  auto* rt = app.add_subcommand("roundtrip", "Seeded end-to-end encode/decode/correct check");
  add_io(rt, true);
  rt->add_option("--trials", trials, "Number of random messages");
  rt->add_option("--seed", seed, "Message and channel seed");
  rt->add_flag("--sweep{full}", sweep, "Corruptions per message: none, sampled or full");
  rt->add_flag("--no-timing", no_timing, "Omit timing percentiles");
  rt->callback([&] {
    action = [&] {
      const auto p = derive_params(c.q, c.n);
      const Sweep mode = parse_sweep(sweep);
      auto rep = roundtrip_suite(p, trials, seed, mode);
      Result r{header("roundtrip"), {}, std::nullopt};
      Json& j = r.doc;
      j["q"] = c.q;
      j["n"] = c.n;
      j["K"] = p.threshold;
      j["trials"] = trials;
      j["seed"] = seed;
      j["sweep"] = sweep_name(mode);
      j["messages"] = rep.messages;
      j["corrections"] = rep.corrections;
      j["encoder_steps"] = rep.encoder_steps;
      std::ostringstream t;
      t << "roundtrip q=" << c.q << " n=" << c.n << " K=" << p.threshold << " trials=" << trials
        << " seed=" << seed << " sweep=" << sweep_name(mode) << "\n"
        << "messages " << rep.messages << "\n"
        << "corrections " << rep.corrections << "\n"
        << "encoder_steps " << rep.encoder_steps << "\n";
      if (!no_timing) {
        j["timing_us"] = Json{{"encode", percentiles(rep.encode_us)},
                              {"decode", percentiles(rep.decode_us)},
                              {"correct", percentiles(rep.correct_us)}};
        t << "encode_us " << percentile_text(rep.encode_us) << "\n"
          << "decode_us " << percentile_text(rep.decode_us) << "\n"
          << "correct_us " << percentile_text(rep.correct_us) << "\n";
      }
      j["passed"] = rep.passed();
      if (rep.failure) {
        const auto& f = *rep.failure;
        Json w{{"check", f.check}, {"message", format_word(f.message, c.q)}, {"detail", f.detail}};
        if (f.corruption) {
          w["i"] = f.corruption->offset;
          w["l"] = f.corruption->length;
        }
        j["failure"] = w;
        t << "failure check=" << f.check << " message=" << format_word(f.message, c.q);
        if (f.corruption) t << " i=" << f.corruption->offset << " l=" << f.corruption->length;
        t << " detail=" << f.detail << "\n";
        r.failed = "roundtrip check '" + f.check + "' failed: " + f.detail;
      }
      t << "status " << (rep.passed() ? "pass" : "fail");
      r.text = t.str();
      return r;
    };
  });

  std::size_t len = 0, K = 0;
  bool list = false;
  auto* e0 = app.add_subcommand("enum-code0", "Count words with no square of half >= K");
  add_io(e0, false);
  add_enum(e0);
  e0->add_option("--len", len, "Word length")->required();
  e0->add_option("--K", K, "Smallest forbidden half-length")->required();
  e0->add_flag("--list", list, "Also print the words");
  e0->callback([&] {
    action = [&] {
      auto rep = enumerate_code0(c.q, len, K, list, enum_options(c));
      Result r{header("enum-code0"), {}, std::nullopt};
      r.doc["q"] = c.q;
      r.doc["len"] = len;
      r.doc["K"] = K;
      r.doc["words"] = rep.words;
      r.doc["count"] = rep.count;
      r.doc["bound"] = rep.bound;
      r.doc["bound_holds"] = rep.bound_holds;
      std::ostringstream t;
      t << "enum-code0 q=" << c.q << " len=" << len << " K=" << K << "\n"
        << "words " << rep.words << "\n"
        << "count " << rep.count << "\n"
        << "bound " << fmt(rep.bound) << "\n"
        << "bound_holds " << bool_text(rep.bound_holds);
      if (list) {
        Json members = Json::array();
        for (const auto& w : rep.members) {
          members.push_back(format_word(w, c.q));
          t << "\n" << members.back().get<std::string>();
        }
        r.doc["members"] = members;
      }
      r.text = t.str();
      if (!rep.bound_holds) r.failed = "count is below the lower bound";
      return r;
    };
  });

  auto* cb = app.add_subcommand("count-bad", "Count words with a square of half >= K");
  add_io(cb, true);
  add_enum(cb);
  cb->add_option("--K", K, "Smallest counted half-length")->required();
  cb->callback([&] {
    action = [&] {
      auto rep = count_bad_words(c.q, c.n, K, enum_options(c));
      Result r{header("count-bad"), {}, std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["K"] = K;
      r.doc["words"] = rep.words;
      r.doc["bad"] = rep.bad;
      r.doc["bound"] = rep.bound;
      r.doc["bound_holds"] = rep.bound_holds;
      std::ostringstream t;
      t << "count-bad q=" << c.q << " n=" << c.n << " K=" << K << "\n"
        << "words " << rep.words << "\n"
        << "bad " << rep.bad << "\n"
        << "bound " << fmt(rep.bound) << "\n"
        << "bound_holds " << bool_text(rep.bound_holds);
      r.text = t.str();
      if (!rep.bound_holds) r.failed = "count exceeds the upper bound";
      return r;
    };
  });

  std::vector<std::size_t> lengths;
  auto* l1 = app.add_subcommand("verify-lemma1", "Check that single-duplication images are disjoint");
  add_io(l1, true);
  add_enum(l1);
  l1->add_option("--l", lengths, "Duplication lengths, comma separated")
      ->required()
      ->delimiter(',');
  l1->callback([&] {
    action = [&] {
      auto rep = verify_ball_disjointness(c.q, c.n, lengths, enum_options(c));
      Result r{header("verify-lemma1"), {}, std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      Json checks = Json::array();
      std::ostringstream t;
      t << "verify-lemma1 q=" << c.q << " n=" << c.n;
      for (const auto& ch : rep.checks) {
        Json cj{{"l", ch.length},
                {"preimages", ch.preimages},
                {"images", ch.images},
                {"collisions", ch.collisions}};
        t << "\nl=" << ch.length << " preimages=" << ch.preimages << " images=" << ch.images
          << " collisions=" << ch.collisions;
        if (ch.witness) {
          cj["witness"] = Json{{"image", format_word(ch.witness->image, c.q)},
                               {"first", format_word(ch.witness->first, c.q)},
                               {"second", format_word(ch.witness->second, c.q)}};
          t << " witness=" << format_word(ch.witness->image, c.q) << ":"
            << format_word(ch.witness->first, c.q) << "," << format_word(ch.witness->second, c.q);
        }
        checks.push_back(std::move(cj));
      }
      r.doc["checks"] = checks;
      r.doc["collisions"] = rep.collisions();
      t << "\ncollisions " << rep.collisions();
      r.text = t.str();
      if (rep.collisions()) r.failed = "single-duplication images collide";
      return r;
    };
  });

  double cval = 0;
  auto* cv = app.add_subcommand("converse", "Redundancy lower bound at l = log_q n - c");
  add_io(cv, true);
  cv->add_option("--c", cval, "Gap below log_q n")->required();
  cv->callback([&] {
    action = [&] {
      auto rep = converse_gap(c.q, c.n, cval);
      Result r{header("converse"), {}, std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["c"] = cval;
      r.doc["log_q_n"] = rep.log_q_n;
      r.doc["l"] = rep.length;
      r.doc["bound"] = rep.bound;
      r.doc["refined_bound"] = rep.refined_bound;
      r.doc["exceeds_one"] = rep.exceeds_one;
      std::ostringstream t;
      t << "converse q=" << c.q << " n=" << c.n << " c=" << fmt(cval) << "\n"
        << "log_q_n " << fmt(rep.log_q_n) << "\n"
        << "l " << fmt(rep.length) << "\n"
        << "bound " << fmt(rep.bound) << "\n"
        << "refined_bound " << fmt(rep.refined_bound) << "\n"
        << "exceeds_one " << bool_text(rep.exceeds_one);
      r.text = t.str();
      return r;
    };
  });

  std::string pattern = "random";
  unsigned reps = 5;
  auto* bn = app.add_subcommand("bench", "Time encode, decode and correct");
  add_io(bn, true);
  bn->add_option("--pattern", pattern, "zeros, random or adversarial")
      ->check(CLI::IsMember({"zeros", "random", "adversarial"}));
  bn->add_option("--reps", reps, "Repetitions")->check(CLI::PositiveNumber);
  bn->add_option("--seed", seed, "Input and channel seed");
  bn->callback([&] {
    action = [&] {
      using Clock = std::chrono::steady_clock;
      auto us = [](Clock::duration d) { return std::chrono::duration<double, std::micro>(d).count(); };
      const auto p = derive_params(c.q, c.n);
      Rng rng(seed);
      const Word x = bench_message(pattern, p, rng);
      std::vector<double> enc_t, dec_t, cor_t;
      std::size_t steps = 0;
      Word cw;
      for (unsigned k = 0; k < reps; ++k) {
        auto t0 = Clock::now();
        auto trace = encode_traced(x, p);
        enc_t.push_back(us(Clock::now() - t0));
        steps = trace.steps.size();
        cw = std::move(trace.codeword);
        t0 = Clock::now();
        Word back = decode(cw, p);
        dec_t.push_back(us(Clock::now() - t0));
        if (back != x) throw Error(ErrorCode::kVerificationFailed, "decode(encode(x)) != x");
        if (cw.size() >= p.threshold) {
          Word y = random_duplication(cw, ChannelSpec{}, p, rng).first;
          t0 = Clock::now();
          Word fixed = correct(y, p);
          cor_t.push_back(us(Clock::now() - t0));
          if (fixed != cw) throw Error(ErrorCode::kVerificationFailed, "correction failed");
        }
      }
      auto stats = [](const std::vector<double>& v) {
        return Json{{"median", median(v)},
                    {"min", v.empty() ? 0.0 : *std::min_element(v.begin(), v.end())}};
      };
      Result r{header("bench"), {}, std::nullopt};
      r.doc["q"] = c.q;
      r.doc["n"] = c.n;
      r.doc["pattern"] = pattern;
      r.doc["reps"] = reps;
      r.doc["encoder_steps"] = steps;
      r.doc["timing_us"] =
          Json{{"encode", stats(enc_t)}, {"decode", stats(dec_t)}, {"correct", stats(cor_t)}};
      std::ostringstream t;
      t << "bench q=" << c.q << " n=" << c.n << " pattern=" << pattern << " reps=" << reps << "\n"
        << "encoder_steps " << steps << "\n"
        << "encode_us median=" << fmt(median(enc_t)) << "\n"
        << "decode_us median=" << fmt(median(dec_t)) << "\n"
        << "correct_us median=" << fmt(median(cor_t));
      r.text = t.str();
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  }

  auto report_error = [&](std::string_view why, const std::string& text) {
    if (c.json) {
      Json j = header(app.get_subcommands().front()->get_name());
      j["error"] = why;
      j["message"] = text;
      err << j.dump() << "\n";
    } else {
      err << "error: " << why << ": " << text << "\n";
    }
  };

  try {
    Result r = action();
    std::string payload = c.json ? r.doc.dump(2) : r.text;
    payload += "\n";
    if (c.out_file) {
      std::ofstream f(*c.out_file);
      if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + *c.out_file);
      f << payload;
    } else {
      out << payload;
    }
    if (r.failed) {
      report_error(reason(ErrorCode::kVerificationFailed), *r.failed);
      return kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    report_error(reason(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    report_error(reason(ErrorCode::kInternalDefect), e.what());
    return kExitVerification;
  }
}

}  // namespace tdcode::cli
