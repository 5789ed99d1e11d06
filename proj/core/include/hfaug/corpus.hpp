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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfaug/text.hpp"

namespace hfaug {

enum class Provenance : std::uint8_t { Real, Pseudo };

struct SentencePair {
  Sentence source;
  Sentence target;
  Provenance provenance = Provenance::Real;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
  std::size_t count(Provenance p) const noexcept;

  friend bool operator==(const ParallelCorpus&, const ParallelCorpus&) = default;
};

// A copy with source and target sides exchanged.
ParallelCorpus swap_sides(const ParallelCorpus& corpus);

// "source<TAB>target", tokens space separated. Throws Error{BadCorpusLine}
// naming the line when the tab is missing or either side is empty.
SentencePair parse_parallel_line(std::string_view line, std::size_t line_number,
                                 Provenance provenance = Provenance::Real);
std::string format_parallel_line(const SentencePair& pair);

// Blank lines are skipped.
ParallelCorpus read_parallel_tsv(std::istream& in, Provenance provenance = Provenance::Real);
ParallelCorpus read_parallel_tsv(const std::filesystem::path& path,
                                 Provenance provenance = Provenance::Real);
void write_parallel_tsv(std::ostream& out, const ParallelCorpus& corpus);
void write_parallel_tsv(const std::filesystem::path& path, const ParallelCorpus& corpus);

// One tokenized sentence per line. Empty lines become empty sentences so
// that line alignment is preserved.
std::vector<Sentence> read_sentences(const std::filesystem::path& path);
void write_sentences(const std::filesystem::path& path, std::span<const Sentence> sentences);

// word -> translation, one entry per word.
using Dictionary = std::map<std::string, std::string, std::less<>>;

// "word<TAB>translation" lines; the first entry for a word wins.
Dictionary read_dictionary(std::istream& in);
Dictionary read_dictionary(const std::filesystem::path& path);
void write_dictionary(std::ostream& out, const Dictionary& dict);
void write_dictionary(const std::filesystem::path& path, const Dictionary& dict);

}  // namespace hfaug
