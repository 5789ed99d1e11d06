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

#include "hfaug/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "hfaug/error.hpp"

namespace hfaug {

std::vector<EvalPair> read_eval_pairs(const std::filesystem::path& hyp,
                                      const std::filesystem::path& ref) {
  auto h = read_lines(hyp);
  auto r = read_lines(ref);
  if (h.size() != r.size()) {
    throw Error(ErrorCode::InvalidArgument, "hypothesis has " + std::to_string(h.size()) +
                                                " lines but reference has " +
                                                std::to_string(r.size()));
  }
  std::vector<EvalPair> pairs;
  pairs.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    pairs.push_back({split_whitespace(h[i]), split_whitespace(r[i])});
  }
  return pairs;
}

// ---------------------------------------------------------------- BLEU

BleuStats::BleuStats(int max_n)
    : matches(static_cast<std::size_t>(std::max(1, max_n)), 0),
      totals(static_cast<std::size_t>(std::max(1, max_n)), 0) {}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (std::size_t n = 0; n < matches.size() && n < other.matches.size(); ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
  return *this;
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngram_counts(std::span<const std::string> s, std::size_t n) {
  NgramCounts counts;
  if (s.size() < n) return counts;
  for (std::size_t i = 0; i + n <= s.size(); ++i) {
    ++counts[std::vector<std::string>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                      s.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

}  // namespace

BleuStats sentence_bleu_stats(const EvalPair& pair, int max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "BLEU order must be at least 1");
  BleuStats st(max_n);
  st.hyp_length = pair.hypothesis.size();
  st.ref_length = pair.reference.size();
  for (int n = 1; n <= max_n; ++n) {
    const auto hyp = ngram_counts(pair.hypothesis, static_cast<std::size_t>(n));
    const auto ref = ngram_counts(pair.reference, static_cast<std::size_t>(n));
    std::size_t total = 0, match = 0;
    for (const auto& [g, c] : hyp) {
      total += c;
      if (auto it = ref.find(g); it != ref.end()) match += std::min(c, it->second);
    }
    st.matches[static_cast<std::size_t>(n - 1)] = match;
    st.totals[static_cast<std::size_t>(n - 1)] = total;
  }
  return st;
}

double bleu_from_stats(const BleuStats& stats, const BleuOptions& options) {
  if (stats.hyp_length == 0) return 0.0;
  double log_sum = 0.0;
  const std::size_t orders = stats.matches.size();
  for (std::size_t n = 0; n < orders; ++n) {
    double m = static_cast<double>(stats.matches[n]);
    double t = static_cast<double>(stats.totals[n]);
    if (options.smooth && n > 0) {
      m += 1.0;
      t += 1.0;
    }
    if (m <= 0.0 || t <= 0.0) return 0.0;
    log_sum += std::log(m / t);
  }
  const double c = static_cast<double>(stats.hyp_length);
  const double r = static_cast<double>(stats.ref_length);
  const double log_bp = std::min(0.0, 1.0 - r / c);
  return 100.0 * std::exp(log_bp + log_sum / static_cast<double>(orders));
}

double corpus_bleu(std::span<const EvalPair> pairs, const BleuOptions& options) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyPairList, "BLEU needs at least one pair");
  BleuStats total(options.max_n);
  for (const auto& p : pairs) total += sentence_bleu_stats(p, options.max_n);
  return bleu_from_stats(total, options);
}

// ---------------------------------------------------------------- RIBES

RibesAlignment ribes_align(std::span<const std::string> hyp, std::span<const std::string> ref) {
  std::unordered_map<std::string_view, std::size_t> hyp_count, ref_count;
  std::unordered_map<std::string_view, std::size_t> ref_pos;
  for (const auto& w : hyp) ++hyp_count[w];
  for (std::size_t k = 0; k < ref.size(); ++k) {
    ++ref_count[ref[k]];
    ref_pos[ref[k]] = k;
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(hyp.size(), kNone);
  std::vector<bool> ref_used(ref.size(), false);

  for (std::size_t i = 0; i < hyp.size(); ++i) {
    auto rc = ref_count.find(hyp[i]);
    if (hyp_count[hyp[i]] == 1 && rc != ref_count.end() && rc->second == 1) {
      match[i] = ref_pos[hyp[i]];
      ref_used[match[i]] = true;
    }
  }

  auto bigram_in_hyp = [&](std::size_t a) {
    std::size_t n = 0;
    for (std::size_t x = 0; x + 1 < hyp.size(); ++x) {
      if (hyp[x] == hyp[a] && hyp[x + 1] == hyp[a + 1]) ++n;
    }
    return n;
  };
  // Free reference positions k holding `word` where ref[k + offset] == neighbour.
  auto candidates = [&](std::string_view word, std::string_view neighbour, int offset) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < ref.size(); ++k) {
      if (ref_used[k] || ref[k] != word) continue;
      const auto nk = static_cast<std::ptrdiff_t>(k) + offset;
      if (nk < 0 || nk >= static_cast<std::ptrdiff_t>(ref.size())) continue;
      if (ref[static_cast<std::size_t>(nk)] == neighbour) out.push_back(k);
    }
    return out;
  };

  for (std::size_t i = 0; i < hyp.size(); ++i) {
    if (match[i] != kNone || !ref_count.contains(hyp[i])) continue;
    std::optional<std::size_t> next, prev;
    if (i + 1 < hyp.size() && bigram_in_hyp(i) == 1) {
      auto c = candidates(hyp[i], hyp[i + 1], 1);
      if (c.size() == 1) next = c[0];
    }
    if (i > 0 && bigram_in_hyp(i - 1) == 1) {
      auto c = candidates(hyp[i], hyp[i - 1], -1);
      if (c.size() == 1) prev = c[0];
    }
    std::optional<std::size_t> pick;
    if (next && prev) {
      if (*next == *prev) pick = next;
    } else {
      pick = next ? next : prev;
    }
    if (pick) {
      match[i] = *pick;
      ref_used[*pick] = true;
    }
  }

  RibesAlignment out;
  for (auto m : match) {
    if (m != kNone) out.ranks.push_back(m);
  }
  return out;
}

namespace {

// Counts pairs i < j with v[i] > v[j] by merge sort.
std::size_t count_inversions(std::vector<std::size_t>& v, std::vector<std::size_t>& tmp,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t inv = count_inversions(v, tmp, lo, mid) + count_inversions(v, tmp, mid, hi);
  std::size_t a = lo, b = mid, o = lo;
  while (a < mid && b < hi) {
    if (v[b] < v[a]) {
      inv += mid - a;
      tmp[o++] = v[b++];
    } else {
      tmp[o++] = v[a++];
    }
  }
  while (a < mid) tmp[o++] = v[a++];
  while (b < hi) tmp[o++] = v[b++];
  std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
            tmp.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

double kendall_tau(std::span<const std::size_t> ranks) {
  const std::size_t n = ranks.size();
  if (n < 2) throw Error(ErrorCode::TooFewRanks, "Kendall's tau needs at least two ranks");
  std::vector<std::size_t> v(ranks.begin(), ranks.end());
  std::vector<std::size_t> tmp(n);
  const std::size_t discordant = count_inversions(v, tmp, 0, n);
  const std::size_t pairs = n * (n - 1) / 2;
  const std::size_t concordant = pairs - discordant;
  return (static_cast<double>(concordant) - static_cast<double>(discordant)) /
         static_cast<double>(pairs);
}

double ribes_sentence(std::span<const std::string> hyp, std::span<const std::string> ref,
                      const RibesOptions& options) {
  if (hyp.empty() || ref.empty()) return 0.0;
  const RibesAlignment al = ribes_align(hyp, ref);
  if (al.matched_count() < 2) return 0.0;
  const double nkt = (kendall_tau(al.ranks) + 1.0) / 2.0;
  const double precision =
      static_cast<double>(al.matched_count()) / static_cast<double>(hyp.size());
  const double bp = std::min(1.0, std::exp(1.0 - static_cast<double>(ref.size()) /
                                                     static_cast<double>(hyp.size())));
  return nkt * std::pow(precision, options.alpha) * std::pow(bp, options.beta);
}

double corpus_ribes(std::span<const EvalPair> pairs, const RibesOptions& options) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyPairList, "RIBES needs at least one pair");
  double sum = 0.0;
  for (const auto& p : pairs) sum += ribes_sentence(p.hypothesis, p.reference, options);
  return sum / static_cast<double>(pairs.size());
}

// ---------------------------------------------------------------- buckets

std::string LengthBucket::label() const {
  return upper ? std::to_string(lower) + "-" + std::to_string(*upper)
               : std::to_string(lower) + "+";
}

std::size_t bucket_index(std::size_t ref_length, std::span<const std::size_t> bounds) {
  return static_cast<std::size_t>(std::lower_bound(bounds.begin(), bounds.end(), ref_length) -
                                  bounds.begin());
}

std::vector<LengthBucket> bucket_bleu(std::span<const EvalPair> pairs,
                                      std::span<const std::size_t> bounds,
                                      const BleuOptions& options) {
  for (std::size_t i = 1; i < bounds.size(); ++i) {
    if (bounds[i] <= bounds[i - 1]) {
      throw Error(ErrorCode::UnsortedBoundaries, "bucket boundaries must be strictly ascending");
    }
  }
  std::vector<std::vector<EvalPair>> members(bounds.size() + 1);
  for (const auto& p : pairs) members[bucket_index(p.reference.size(), bounds)].push_back(p);

  std::vector<LengthBucket> out;
  for (std::size_t b = 0; b <= bounds.size(); ++b) {
    LengthBucket bucket;
    bucket.lower = b == 0 ? 0 : bounds[b - 1] + 1;
    if (b < bounds.size()) bucket.upper = bounds[b];
    bucket.count = members[b].size();
    if (!members[b].empty()) bucket.bleu = corpus_bleu(members[b], options);
    out.push_back(bucket);
  }
  return out;
}

}  // namespace hfaug
