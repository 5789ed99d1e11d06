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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hfaug/corpus.hpp"

namespace hfaug {

// Word vectors of one language, assumed already mapped into a shared
// cross-lingual space by an external tool.
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dim);

  // Throws Error{DimensionMismatch} on a wrong length and
  // Error{BadEmbeddingFile} on NaN/Inf. Duplicate words keep the first vector.
  void add(std::string word, std::span<const double> vec);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<std::string>& words() const noexcept { return words_; }
  std::span<const double> vector(std::size_t index) const;
  std::optional<std::size_t> find(std::string_view word) const;

 private:
  std::size_t dim_;
  std::vector<std::string> words_;
  std::vector<double> data_;  // row-major, size() x dim()
  std::unordered_map<std::string, std::size_t> index_;
};

// Text format: header "count dim", then "word v1 ... vd" per line.
EmbeddingTable read_embeddings(std::istream& in);
EmbeddingTable read_embeddings(const std::filesystem::path& path);

enum class SimilarityMethod { Cosine, Csls };

struct InduceOptions {
  SimilarityMethod method = SimilarityMethod::Csls;
  std::size_t csls_k = 10;
};

// Maps each query word (looked up in `query_emb`) to its most similar word in
// `candidate_emb`. Cosine ranks by cos(x, y); CSLS ranks by
//   2 cos(x, y) - r_cand(y) - r_query(x)
// where r_query(x) is the mean cosine of x's k nearest candidates and
// r_cand(y) the mean cosine of y's k nearest words of `query_emb`
// (k is clipped to the table size). Ties go to the earlier candidate.
// Query words missing from `query_emb` are skipped. Zero vectors have
// cosine 0 with everything.
// Throws Error{DimensionMismatch} or Error{EmptyQueryVocab}.
Dictionary induce_embedding_dict(const EmbeddingTable& candidate_emb,
                                 const EmbeddingTable& query_emb,
                                 std::span<const std::string> query_vocab,
                                 const InduceOptions& options = {});

}  // namespace hfaug
