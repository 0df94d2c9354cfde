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

#include <benchmark/benchmark.h>

#include "tdcode/channel.hpp"
#include "tdcode/codec.hpp"
#include "tdcode/repeats.hpp"
#include "tdcode/seqword.hpp"
#include "tdcode/windows.hpp"

using namespace tdcode;

namespace {

// All-zeros is the worst case for the encoder: every iteration removes a
// square and the block it writes back is followed by another one.
void BM_EncodeZeros(benchmark::State& state) {
  const auto p = derive_params(4, static_cast<std::size_t>(state.range(0)));
  const Word x(p.n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(encode(x, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EncodeZeros)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Complexity();

void BM_EncodeRandom(benchmark::State& state) {
  const auto p = derive_params(4, static_cast<std::size_t>(state.range(0)));
  Rng rng(1);
  const Word x = rng.word(p.n, p.q);
  for (auto _ : state) benchmark::DoNotOptimize(encode(x, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EncodeRandom)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_DecodeZeros(benchmark::State& state) {
  const auto p = derive_params(4, static_cast<std::size_t>(state.range(0)));
  const Word cw = encode(Word(p.n, 0), p);
  for (auto _ : state) benchmark::DoNotOptimize(decode(cw, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecodeZeros)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Complexity();

void BM_Correct(benchmark::State& state) {
  const auto p = derive_params(4, static_cast<std::size_t>(state.range(0)));
  Rng rng(2);
  const Word cw = encode(rng.word(p.n, p.q), p);
  const Word y = random_duplication(cw, ChannelSpec{}, p, rng).first;
  for (auto _ : state) benchmark::DoNotOptimize(correct(y, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Correct)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_LeftmostSquareRandom(benchmark::State& state) {
  Rng rng(3);
  const Word w = rng.word(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_leftmost_long(w, 12));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LeftmostSquareRandom)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_AbsentWindow(benchmark::State& state) {
  Rng rng(4);
  const Word w = rng.word(static_cast<std::size_t>(state.range(0)), 4);
  const auto p = derive_params(4, w.size());
  auto index = WindowIndex::build(w, p);
  for (auto _ : state) benchmark::DoNotOptimize(index.find_absent());
}
BENCHMARK(BM_AbsentWindow)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_SeqwordSpliceCycle(benchmark::State& state) {
  Rng rng(5);
  const auto size = static_cast<std::size_t>(state.range(0));
  EditableWord t(rng.word(size, 4));
  for (auto _ : state) {
    const std::size_t a = rng.uniform(1, size - 16);
    Word piece = t.delete_range(a, a + 15);
    t.append(piece);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeqwordSpliceCycle)->RangeMultiplier(8)->Range(1 << 10, 1 << 19)->Complexity();

}  // namespace

BENCHMARK_MAIN();
