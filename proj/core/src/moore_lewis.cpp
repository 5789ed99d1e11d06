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

#include "hfaug/moore_lewis.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hfaug/error.hpp"
#include "hfaug/random.hpp"

namespace hfaug {

double moore_lewis_score(const NGramLM& in_domain, const NGramLM& general,
                         std::span<const std::string> tokens) {
  if (tokens.empty()) return std::numeric_limits<double>::infinity();
  return cross_entropy(in_domain, tokens) - cross_entropy(general, tokens);
}

Selection moore_lewis_select(std::span<const Sentence> pool, const NGramLM& in_domain,
                             const NGramLM& general, std::size_t k) {
  if (in_domain.order() != general.order()) {
    throw Error(ErrorCode::InvalidArgument, "in-domain and general LMs must share an order");
  }
  Selection sel;
  sel.scores.reserve(pool.size());
  for (const auto& s : pool) sel.scores.push_back(moore_lewis_score(in_domain, general, s));

  if (k >= pool.size()) {
    sel.k_exceeded_pool = k > pool.size();
    sel.selected.resize(pool.size());
    std::iota(sel.selected.begin(), sel.selected.end(), std::size_t{0});
    return sel;
  }
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sel.scores[a] < sel.scores[b]; });
  sel.selected.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(sel.selected.begin(), sel.selected.end());
  return sel;
}

std::vector<Sentence> sample_sentences(std::span<const Sentence> pool, std::size_t n,
                                       std::uint64_t seed) {
  if (n >= pool.size()) return {pool.begin(), pool.end()};
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  SeededRng rng(seed);
  rng.shuffle(std::span<std::size_t>(idx));
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  std::vector<Sentence> out;
  out.reserve(n);
  for (auto i : idx) out.push_back(pool[i]);
  return out;
}

}  // namespace hfaug
