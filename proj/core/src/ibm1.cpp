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

#include "hfaug/ibm1.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <thread>

#include <fmt/format.h>

#include "hfaug/error.hpp"

namespace hfaug {

TranslationTable::TranslationTable() {
  intern_given(kNullWord);
  offsets_ = {0, 0};
}

std::uint32_t TranslationTable::intern_given(std::string_view e) {
  auto [it, inserted] =
      given_ids_.try_emplace(std::string(e), static_cast<std::uint32_t>(given_.size()));
  if (inserted) given_.emplace_back(e);
  return it->second;
}

std::uint32_t TranslationTable::intern_generated(std::string_view f) {
  auto [it, inserted] =
      generated_ids_.try_emplace(std::string(f), static_cast<std::uint32_t>(generated_.size()));
  if (inserted) generated_.emplace_back(f);
  return it->second;
}

std::int64_t TranslationTable::slot(std::uint32_t e, std::uint32_t f) const {
  if (e + 1 >= offsets_.size()) return -1;
  auto first = cols_.begin() + static_cast<std::ptrdiff_t>(offsets_[e]);
  auto last = cols_.begin() + static_cast<std::ptrdiff_t>(offsets_[e + 1]);
  auto it = std::lower_bound(first, last, f);
  if (it == last || *it != f) return -1;
  return it - cols_.begin();
}

std::int64_t TranslationTable::slot(std::string_view f, std::string_view e) const {
  auto ei = given_ids_.find(std::string(e));
  auto fi = generated_ids_.find(std::string(f));
  if (ei == given_ids_.end() || fi == generated_ids_.end()) return -1;
  return slot(ei->second, fi->second);
}

double TranslationTable::prob(std::string_view f, std::string_view e) const {
  const std::int64_t s = slot(f, e);
  return s < 0 ? 0.0 : probs_[static_cast<std::size_t>(s)];
}

std::vector<std::pair<std::string, double>> TranslationTable::row(std::string_view e) const {
  std::vector<std::pair<std::string, double>> out;
  auto it = given_ids_.find(std::string(e));
  if (it == given_ids_.end() || it->second + 1 >= offsets_.size()) return out;
  for (std::size_t s = offsets_[it->second]; s < offsets_[it->second + 1]; ++s) {
    out.emplace_back(generated_[cols_[s]], probs_[s]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double TranslationTable::row_sum(std::string_view e) const {
  double sum = 0.0;
  for (const auto& [f, p] : row(e)) sum += p;
  return sum;
}

std::vector<std::string> TranslationTable::given_words() const {
  std::vector<std::string> out(given_.begin() + 1, given_.end());
  std::sort(out.begin(), out.end());
  return out;
}

void TranslationTable::write_tsv(std::ostream& out) const {
  std::vector<std::string> rows = given_words();
  rows.insert(rows.begin(), std::string(kNullWord));
  for (const auto& e : rows) {
    for (const auto& [f, p] : row(e)) out << fmt::format("{}\t{}\t{}\n", e, f, p);
  }
}

TranslationTable TranslationTable::read_tsv(std::istream& in) {
  std::map<std::string, std::map<std::string, double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::BadCorpusLine,
                  "table line " + std::to_string(line_no) + ": expected e<TAB>f<TAB>prob");
    }
    double p = 0.0;
    try {
      p = std::stod(fields[2]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadCorpusLine, "table line " + std::to_string(line_no) + ": bad prob");
    }
    rows[fields[0]][fields[1]] = p;
  }
  TranslationTable t;
  for (const auto& [e, _] : rows) t.intern_given(e);
  for (const auto& [e, r] : rows)
    for (const auto& [f, _] : r) t.intern_generated(f);

  std::vector<std::vector<std::pair<std::uint32_t, double>>> by_row(t.given_.size());
  for (const auto& [e, r] : rows) {
    auto& dst = by_row[t.given_ids_.at(e)];
    for (const auto& [f, p] : r) dst.emplace_back(t.generated_ids_.at(f), p);
  }
  t.offsets_.assign(1, 0);
  for (auto& r : by_row) {
    std::sort(r.begin(), r.end());
    for (const auto& [f, p] : r) {
      t.cols_.push_back(f);
      t.probs_.push_back(p);
    }
    t.offsets_.push_back(t.cols_.size());
  }
  return t;
}

// Owns the integerized corpus and runs EM directly on the table's CSR arrays.
class Ibm1Trainer {
 public:
  explicit Ibm1Trainer(const ParallelCorpus& corpus) {
    if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "IBM Model 1 needs at least one pair");
    given_.reserve(corpus.size());
    generated_.reserve(corpus.size());
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const auto& p = corpus.pairs[k];
      if (p.source.empty() || p.target.empty()) {
        throw Error(ErrorCode::EmptySentence, "pair " + std::to_string(k) + " has an empty side");
      }
      std::vector<std::uint32_t> g, f;
      for (const auto& w : p.target) g.push_back(table_.intern_given(w));
      for (const auto& w : p.source) f.push_back(table_.intern_generated(w));
      given_.push_back(std::move(g));
      generated_.push_back(std::move(f));
    }
    init_uniform();
  }

  Ibm1Model run(const Ibm1Options& options) {
    if (options.iterations < 0) {
      throw Error(ErrorCode::InvalidArgument, "iteration count must be non-negative");
    }
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(given_.size())));
    Ibm1Model model;
    std::vector<double> counts(table_.probs_.size());
    for (int it = 0; it < options.iterations; ++it) {
      model.log_likelihood.push_back(expectation(workers, &counts));
      maximization(counts);
    }
    model.log_likelihood.push_back(expectation(workers, nullptr));
    model.table = std::move(table_);
    return model;
  }

 private:
  void init_uniform() {
    std::vector<std::vector<std::uint32_t>> cooc(table_.given_.size());
    for (std::size_t k = 0; k < given_.size(); ++k) {
      auto& null_row = cooc[0];
      null_row.insert(null_row.end(), generated_[k].begin(), generated_[k].end());
      for (auto e : given_[k]) {
        cooc[e].insert(cooc[e].end(), generated_[k].begin(), generated_[k].end());
      }
    }
    auto& t = table_;
    t.offsets_.assign(1, 0);
    t.cols_.clear();
    t.probs_.clear();
    for (auto& r : cooc) {
      std::sort(r.begin(), r.end());
      r.erase(std::unique(r.begin(), r.end()), r.end());
      const double u = r.empty() ? 0.0 : 1.0 / static_cast<double>(r.size());
      for (auto f : r) {
        t.cols_.push_back(f);
        t.probs_.push_back(u);
      }
      t.offsets_.push_back(t.cols_.size());
    }
  }

  // Accumulates expected counts for pairs [begin, end); returns their log-likelihood.
  double expect_range(std::size_t begin, std::size_t end, std::vector<double>* counts) const {
    std::vector<std::size_t> slots;
    double ll = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& g = given_[k];
      const double norm = std::log(static_cast<double>(g.size() + 1));
      for (auto f : generated_[k]) {
        slots.clear();
        slots.push_back(static_cast<std::size_t>(table_.slot(0, f)));
        for (auto e : g) slots.push_back(static_cast<std::size_t>(table_.slot(e, f)));
        double total = 0.0;
        for (auto s : slots) total += table_.probs_[s];
        ll += std::log(total) - norm;
        if (counts) {
          for (auto s : slots) (*counts)[s] += table_.probs_[s] / total;
        }
      }
    }
    return ll;
  }

  double expectation(unsigned workers, std::vector<double>* counts) const {
    if (counts) std::fill(counts->begin(), counts->end(), 0.0);
    if (workers == 1) return expect_range(0, given_.size(), counts);

    const std::size_t n = given_.size();
    std::vector<std::vector<double>> partial(workers);
    std::vector<double> ll(workers, 0.0);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const std::size_t b = n * w / workers;
          const std::size_t e = n * (w + 1) / workers;
          if (counts) partial[w].assign(counts->size(), 0.0);
          ll[w] = expect_range(b, e, counts ? &partial[w] : nullptr);
        });
      }
    }
    double total = 0.0;
    for (unsigned w = 0; w < workers; ++w) {
      total += ll[w];
      if (counts) {
        for (std::size_t s = 0; s < counts->size(); ++s) (*counts)[s] += partial[w][s];
      }
    }
    return total;
  }

  void maximization(const std::vector<double>& counts) {
    auto& t = table_;
    for (std::size_t e = 0; e + 1 < t.offsets_.size(); ++e) {
      double z = 0.0;
      for (std::size_t s = t.offsets_[e]; s < t.offsets_[e + 1]; ++s) z += counts[s];
      if (z <= 0.0) continue;
      for (std::size_t s = t.offsets_[e]; s < t.offsets_[e + 1]; ++s) t.probs_[s] = counts[s] / z;
    }
  }

  TranslationTable table_;
  std::vector<std::vector<std::uint32_t>> given_;
  std::vector<std::vector<std::uint32_t>> generated_;
};

Ibm1Model train_ibm1(const ParallelCorpus& corpus, const Ibm1Options& options) {
  Ibm1Trainer trainer(corpus);
  return trainer.run(options);
}

AlignmentLinks viterbi_align(std::span<const std::string> given,
                             std::span<const std::string> generated,
                             const TranslationTable& table) {
  AlignmentLinks links;
  for (std::size_t j = 0; j < generated.size(); ++j) {
    double best = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < given.size(); ++i) {
      double p = table.prob(generated[j], given[i]);
      if (p <= 0.0) p = kUnseenFloor;
      if (p > best) {
        best = p;
        best_i = i;
      }
    }
    double null_p = table.prob(generated[j], kNullWord);
    if (null_p <= 0.0) null_p = kUnseenFloor;
    if (!given.empty() && best >= null_p) links.emplace(best_i, j);
  }
  return links;
}

AlignmentLinks transpose(const AlignmentLinks& links) {
  AlignmentLinks out;
  for (const auto& [i, j] : links) out.emplace(j, i);
  return out;
}

AlignmentLinks intersect_alignments(const AlignmentLinks& fwd, const AlignmentLinks& bwd) {
  AlignmentLinks out;
  for (const auto& [i, j] : bwd) {
    if (fwd.contains({j, i})) out.emplace(j, i);
  }
  return out;
}

std::vector<AlignmentLinks> intersected_alignments(const ParallelCorpus& corpus,
                                                   const TranslationTable& source_given_target,
                                                   const TranslationTable& target_given_source) {
  std::vector<AlignmentLinks> out;
  out.reserve(corpus.size());
  for (const auto& p : corpus.pairs) {
    // (source, target) orientation.
    auto fwd = viterbi_align(p.source, p.target, target_given_source);
    // (target, source) orientation, transposed inside the intersection.
    auto bwd = viterbi_align(p.target, p.source, source_given_target);
    out.push_back(intersect_alignments(fwd, bwd));
  }
  return out;
}

}  // namespace hfaug
