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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hfaug/ngram_lm.hpp"
#include "hfaug/text.hpp"

namespace hfaug {

// H_in(s) - H_gen(s) in bits per token; lower is more in-domain. Empty
// sentences score +infinity so they are selected last.
double moore_lewis_score(const NGramLM& in_domain, const NGramLM& general,
                         std::span<const std::string> tokens);

struct Selection {
  // Indices into the pool of the selected sentences, ascending.
  std::vector<std::size_t> selected;
  // Score of every pool sentence, in pool order.
  std::vector<double> scores;
  // Set when k exceeded the pool size and everything was returned.
  bool k_exceeded_pool = false;
};

// Keeps the k lowest-scoring sentences; score ties go to the earlier
// sentence. Throws Error{InvalidArgument} when the two models differ in order.
Selection moore_lewis_select(std::span<const Sentence> pool, const NGramLM& in_domain,
                             const NGramLM& general, std::size_t k);

// Seeded uniform sample of min(n, |pool|) sentences without replacement, in pool order.
std::vector<Sentence> sample_sentences(std::span<const Sentence> pool, std::size_t n,
                                       std::uint64_t seed);

}  // namespace hfaug
