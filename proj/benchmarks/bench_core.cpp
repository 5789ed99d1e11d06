// Copyright 2026 The hfaug Authors
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

#include <filesystem>
#include <numeric>
#include <random>

#include "hfaug/embedding.hpp"
#include "hfaug/head_rules.hpp"
#include "hfaug/ibm1.hpp"
#include "hfaug/metrics.hpp"
#include "hfaug/moore_lewis.hpp"
#include "hfaug/ngram_lm.hpp"
#include "hfaug/random.hpp"
#include "hfaug/reorder.hpp"
#include "synthetic.hpp"

namespace {

using namespace hfaug;

const HeadRuleTable& rules() {
  static const HeadRuleTable t =
      HeadRuleTable::load(std::filesystem::path(HFAUG_DATA_DIR) / "head_rules.ptb.tsv");
  return t;
}

void BM_ParseResolveReorder(benchmark::State& state) {
  testing::TreeGenerator gen(1);
  const auto trees = gen.sentences(static_cast<std::size_t>(state.range(0)));
  const ReorderConfig cfg;
  for (auto _ : state) {
    for (const auto& t : trees) {
      auto r = head_finalize(resolve_heads(parse_bracketed(t.bracketed), rules()), cfg);
      benchmark::DoNotOptimize(r.tokens.data());
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ParseResolveReorder)->Arg(1000);

ParallelCorpus synthetic_parallel(std::size_t n) {
  testing::TreeGenerator gen(2);
  ParallelCorpus c;
  for (const auto& t : gen.sentences(n)) c.pairs.push_back({t.foreign, t.english});
  return c;
}

void BM_Ibm1Train(benchmark::State& state) {
  const auto corpus = synthetic_parallel(static_cast<std::size_t>(state.range(0)));
  const Ibm1Options opts{5, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    auto m = train_ibm1(corpus, opts);
    benchmark::DoNotOptimize(m.log_likelihood.back());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * opts.iterations);
}
BENCHMARK(BM_Ibm1Train)->Args({2000, 1})->Args({2000, 4})->Unit(benchmark::kMillisecond);

void BM_LmTrainAndScore(benchmark::State& state) {
  testing::DomainGenerator in(3, true), gen(4, false);
  const auto train = in.sentences(2000);
  const auto pool = gen.sentences(2000);
  for (auto _ : state) {
    auto lm = NGramLM::train(train, 4, 2);
    double sum = 0;
    for (const auto& s : pool) sum += cross_entropy(lm, s);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_LmTrainAndScore)->Unit(benchmark::kMillisecond);

void BM_KendallTau(benchmark::State& state) {
  std::vector<std::size_t> ranks(static_cast<std::size_t>(state.range(0)));
  std::iota(ranks.begin(), ranks.end(), std::size_t{0});
  SeededRng rng(5);
  rng.shuffle(std::span<std::size_t>(ranks));
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau(ranks));
}
BENCHMARK(BM_KendallTau)->Arg(64)->Arg(4096);

void BM_InduceCsls(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SeededRng rng(6);
  std::normal_distribution<double> g;
  EmbeddingTable cand(64), query(64);
  std::vector<double> v(64);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : v) x = g(rng.engine());
    cand.add("c" + std::to_string(i), v);
    for (auto& x : v) x = g(rng.engine());
    query.add("q" + std::to_string(i), v);
  }
  for (auto _ : state) {
    auto d = induce_embedding_dict(cand, query, query.words(), {SimilarityMethod::Csls, 10});
    benchmark::DoNotOptimize(d.size());
  }
}
BENCHMARK(BM_InduceCsls)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
