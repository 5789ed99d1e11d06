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

#include "hfaug/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "hfaug/error.hpp"

namespace hfaug {

std::size_t ParallelCorpus::count(Provenance p) const noexcept {
  std::size_t n = 0;
  for (const auto& pr : pairs) n += pr.provenance == p ? 1 : 0;
  return n;
}

ParallelCorpus swap_sides(const ParallelCorpus& corpus) {
  ParallelCorpus out;
  out.pairs.reserve(corpus.size());
  for (const auto& p : corpus.pairs) out.pairs.push_back({p.target, p.source, p.provenance});
  return out;
}

SentencePair parse_parallel_line(std::string_view line, std::size_t line_number,
                                 Provenance provenance) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
    throw Error(ErrorCode::BadCorpusLine,
                "line " + std::to_string(line_number) + ": expected source<TAB>target");
  }
  SentencePair pair{split_whitespace(line.substr(0, tab)), split_whitespace(line.substr(tab + 1)),
                    provenance};
  if (pair.source.empty() || pair.target.empty()) {
    throw Error(ErrorCode::BadCorpusLine,
                "line " + std::to_string(line_number) + ": empty side in sentence pair");
  }
  return pair;
}

std::string format_parallel_line(const SentencePair& pair) {
  return join(pair.source) + '\t' + join(pair.target);
}

ParallelCorpus read_parallel_tsv(std::istream& in, Provenance provenance) {
  ParallelCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    corpus.pairs.push_back(parse_parallel_line(line, line_no, provenance));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failed on parallel corpus");
  return corpus;
}

ParallelCorpus read_parallel_tsv(const std::filesystem::path& path, Provenance provenance) {
  auto in = open_input(path);
  return read_parallel_tsv(in, provenance);
}

void write_parallel_tsv(std::ostream& out, const ParallelCorpus& corpus) {
  for (const auto& p : corpus.pairs) out << format_parallel_line(p) << '\n';
}

void write_parallel_tsv(const std::filesystem::path& path, const ParallelCorpus& corpus) {
  auto out = open_output(path);
  write_parallel_tsv(out, corpus);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

std::vector<Sentence> read_sentences(const std::filesystem::path& path) {
  std::vector<Sentence> out;
  for (const auto& line : read_lines(path)) out.push_back(split_whitespace(line));
  return out;
}

void write_sentences(const std::filesystem::path& path, std::span<const Sentence> sentences) {
  auto out = open_output(path);
  for (const auto& s : sentences) out << join(s) << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

Dictionary read_dictionary(std::istream& in) {
  Dictionary dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::BadCorpusLine,
                  "dictionary line " + std::to_string(line_no) + ": expected word<TAB>translation");
    }
    std::string word(trim(std::string_view(line).substr(0, tab)));
    std::string translation(trim(std::string_view(line).substr(tab + 1)));
    if (word.empty() || translation.empty()) {
      throw Error(ErrorCode::BadCorpusLine,
                  "dictionary line " + std::to_string(line_no) + ": empty field");
    }
    dict.emplace(std::move(word), std::move(translation));
  }
  if (in.bad()) throw Error(ErrorCode::Io, "read failed on dictionary");
  return dict;
}

Dictionary read_dictionary(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_dictionary(in);
}

void write_dictionary(std::ostream& out, const Dictionary& dict) {
  for (const auto& [w, t] : dict) out << w << '\t' << t << '\n';
}

void write_dictionary(const std::filesystem::path& path, const Dictionary& dict) {
  auto out = open_output(path);
  write_dictionary(out, dict);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

}  // namespace hfaug
