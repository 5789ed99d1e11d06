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

#include "hfaug/embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>

#include <Eigen/Dense>

#include "hfaug/error.hpp"

namespace hfaug {

EmbeddingTable::EmbeddingTable(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::BadEmbeddingFile, "embedding dimension must be positive");
}

void EmbeddingTable::add(std::string word, std::span<const double> vec) {
  if (vec.size() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "vector for '" + word + "' has " +
                                                  std::to_string(vec.size()) + " components, expected " +
                                                  std::to_string(dim_));
  }
  for (double v : vec) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::BadEmbeddingFile, "non-finite component in vector for '" + word + "'");
    }
  }
  if (index_.contains(word)) return;
  index_.emplace(word, words_.size());
  words_.push_back(std::move(word));
  data_.insert(data_.end(), vec.begin(), vec.end());
}

std::span<const double> EmbeddingTable::vector(std::size_t index) const {
  return std::span<const double>(data_).subspan(index * dim_, dim_);
}

std::optional<std::size_t> EmbeddingTable::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

double parse_double(std::string_view s, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::BadEmbeddingFile,
                "line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

RowMatrix normalized(const EmbeddingTable& t, std::span<const std::size_t> rows) {
  RowMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(t.dim()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto v = t.vector(rows[r]);
    for (std::size_t c = 0; c < v.size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[c];
    const double norm = m.row(static_cast<Eigen::Index>(r)).norm();
    if (norm > 0.0) m.row(static_cast<Eigen::Index>(r)) /= norm;
  }
  return m;
}

std::vector<std::size_t> all_rows(const EmbeddingTable& t) {
  std::vector<std::size_t> r(t.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
  return r;
}

double mean_top_k(std::vector<double>& buf, std::size_t k) {
  k = std::min(k, buf.size());
  if (k == 0) return 0.0;
  std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(k - 1), buf.end(),
                   std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += buf[i];
  return sum / static_cast<double>(k);
}

// Bounds the similarity block held in memory to roughly this many entries.
constexpr Eigen::Index kBlockEntries = 1 << 22;

Eigen::Index block_rows(Eigen::Index cols) {
  return std::max<Eigen::Index>(1, kBlockEntries / std::max<Eigen::Index>(1, cols));
}

// Mean cosine of each row of `a` with its k nearest rows of `b`.
std::vector<double> neighborhood_density(const RowMatrix& a, const RowMatrix& b, std::size_t k) {
  std::vector<double> out(static_cast<std::size_t>(a.rows()));
  std::vector<double> buf;
  const Eigen::Index step = block_rows(b.rows());
  for (Eigen::Index start = 0; start < a.rows(); start += step) {
    const Eigen::Index len = std::min(step, a.rows() - start);
    RowMatrix sims = a.middleRows(start, len) * b.transpose();
    for (Eigen::Index r = 0; r < len; ++r) {
      buf.assign(sims.row(r).data(), sims.row(r).data() + sims.cols());
      out[static_cast<std::size_t>(start + r)] = mean_top_k(buf, k);
    }
  }
  return out;
}

}  // namespace

EmbeddingTable read_embeddings(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  auto header = split_whitespace(line);
  if (header.size() != 2) throw Error(ErrorCode::BadEmbeddingFile, "expected 'count dim' header");
  const auto count = static_cast<std::size_t>(parse_double(header[0], line_no));
  const auto dim = static_cast<std::size_t>(parse_double(header[1], line_no));
  EmbeddingTable table(dim);
  std::vector<double> vec(dim);
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != dim + 1) {
      throw Error(ErrorCode::DimensionMismatch,
                  "line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                      " components, got " + std::to_string(fields.size() - 1));
    }
    for (std::size_t c = 0; c < dim; ++c) vec[c] = parse_double(fields[c + 1], line_no);
    table.add(std::move(fields[0]), vec);
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failed on embedding file");
  if (table.size() == 0 && count > 0) {
    throw Error(ErrorCode::BadEmbeddingFile, "header announces vectors but none were read");
  }
  return table;
}

EmbeddingTable read_embeddings(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_embeddings(in);
}

Dictionary induce_embedding_dict(const EmbeddingTable& candidate_emb,
                                 const EmbeddingTable& query_emb,
                                 std::span<const std::string> query_vocab,
                                 const InduceOptions& options) {
  if (candidate_emb.dim() != query_emb.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "embedding spaces have different dimensions");
  }
  if (query_vocab.empty()) throw Error(ErrorCode::EmptyQueryVocab, "no query words given");
  Dictionary dict;
  if (candidate_emb.size() == 0) return dict;

  std::vector<std::size_t> query_rows;
  std::vector<std::string> query_words;
  for (const auto& w : query_vocab) {
    if (auto idx = query_emb.find(w)) {
      query_rows.push_back(*idx);
      query_words.push_back(w);
    }
  }
  if (query_rows.empty()) return dict;

  const RowMatrix cand = normalized(candidate_emb, all_rows(candidate_emb));
  const RowMatrix queries = normalized(query_emb, query_rows);
  const bool csls = options.method == SimilarityMethod::Csls;

  std::vector<double> cand_density;
  std::vector<double> query_density;
  if (csls) {
    const RowMatrix full_query = normalized(query_emb, all_rows(query_emb));
    cand_density = neighborhood_density(cand, full_query, options.csls_k);
    query_density = neighborhood_density(queries, cand, options.csls_k);
  }

  const Eigen::Index step = block_rows(cand.rows());
  for (Eigen::Index start = 0; start < queries.rows(); start += step) {
    const Eigen::Index len = std::min(step, queries.rows() - start);
    RowMatrix sims = queries.middleRows(start, len) * cand.transpose();
    for (Eigen::Index r = 0; r < len; ++r) {
      const auto q = static_cast<std::size_t>(start + r);
      double best = -std::numeric_limits<double>::infinity();
      Eigen::Index best_c = 0;
      for (Eigen::Index c = 0; c < sims.cols(); ++c) {
        double score = sims(r, c);
        if (csls) score = 2.0 * score - cand_density[static_cast<std::size_t>(c)] - query_density[q];
        if (score > best) {
          best = score;
          best_c = c;
        }
      }
      dict.emplace(query_words[q], candidate_emb.words()[static_cast<std::size_t>(best_c)]);
    }
  }
  return dict;
}

}  // namespace hfaug
