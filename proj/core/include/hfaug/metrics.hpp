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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfaug/text.hpp"

namespace hfaug {

struct EvalPair {
  Sentence hypothesis;
  Sentence reference;
};

// Line-aligned hypothesis and reference files. Throws Error{InvalidArgument}
// when the line counts differ.
std::vector<EvalPair> read_eval_pairs(const std::filesystem::path& hyp,
                                      const std::filesystem::path& ref);

struct BleuOptions {
  int max_n = 4;
  // Add-one smoothing of the n >= 2 precisions.
  bool smooth = false;
};

// Pooled n-gram statistics; BLEU is computed from their corpus-level sum.
struct BleuStats {
  std::vector<std::size_t> matches;  // clipped matches per order, index n-1
  std::vector<std::size_t> totals;   // hypothesis n-grams per order
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  explicit BleuStats(int max_n = 4);
  BleuStats& operator+=(const BleuStats& other);
};

BleuStats sentence_bleu_stats(const EvalPair& pair, int max_n = 4);
double bleu_from_stats(const BleuStats& stats, const BleuOptions& options = {});

// Corpus BLEU in [0, 100]: geometric mean of the modified n-gram precisions
// times BP = min(1, exp(1 - r/c)). Without smoothing any zero precision gives
// 0. Throws Error{EmptyPairList}.
double corpus_bleu(std::span<const EvalPair> pairs, const BleuOptions& options = {});

// Word correspondences used by RIBES: ranks[k] is the reference position of
// the k-th matched hypothesis word (hypothesis order). Ranks are distinct.
struct RibesAlignment {
  std::vector<std::size_t> ranks;
  std::size_t matched_count() const noexcept { return ranks.size(); }
};

// Two passes. First, words occurring exactly once in both sentences are
// matched. Then each remaining hypothesis word w at i is matched to a free
// reference position when a bigram context pins it down: (w, hyp[i+1]) or
// (hyp[i-1], w) must occur exactly once in the hypothesis and exactly once
// among free reference positions. When both contexts pin down different
// positions the word stays unmatched.
RibesAlignment ribes_align(std::span<const std::string> hyp, std::span<const std::string> ref);

// (concordant - discordant) / C(n, 2) in O(n log n). Throws Error{TooFewRanks} for n < 2.
double kendall_tau(std::span<const std::size_t> ranks);

struct RibesOptions {
  double alpha = 0.25;
  double beta = 0.10;
};

// NKT * P^alpha * BP^beta with NKT = (tau + 1) / 2, P = matched / |hyp| and
// BP = min(1, exp(1 - |ref| / |hyp|)). Fewer than two matches, an empty
// hypothesis or an empty reference score 0.
double ribes_sentence(std::span<const std::string> hyp, std::span<const std::string> ref,
                      const RibesOptions& options = {});

// Mean sentence RIBES, summed in input order. Throws Error{EmptyPairList}.
double corpus_ribes(std::span<const EvalPair> pairs, const RibesOptions& options = {});

struct LengthBucket {
  std::size_t lower = 0;                // inclusive
  std::optional<std::size_t> upper;     // inclusive; nullopt for the open last bucket
  std::optional<double> bleu;           // nullopt for an empty bucket
  std::size_t count = 0;

  std::string label() const;
};

// Bucket i holds reference lengths in (bounds[i-1], bounds[i]], the first
// bucket starts at 0 and a final open bucket takes everything longer.
// Throws Error{UnsortedBoundaries} unless bounds are strictly ascending.
std::vector<LengthBucket> bucket_bleu(std::span<const EvalPair> pairs,
                                      std::span<const std::size_t> bounds,
                                      const BleuOptions& options = {});

// Index of the bucket a reference length falls into.
std::size_t bucket_index(std::size_t ref_length, std::span<const std::size_t> bounds);

}  // namespace hfaug
