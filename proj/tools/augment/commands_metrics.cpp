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

#include <memory>

#include "commands.hpp"
#include "hfaug/error.hpp"
#include "hfaug/metrics.hpp"

namespace augment {
namespace {

namespace fs = std::filesystem;

struct EvalArgs {
  fs::path hyp, ref;
  bool smooth = false;
  int max_n = 4;
  double alpha = 0.25;
  double beta = 0.10;
  std::string bounds = "10,20,30,40";
};

void add_files(CLI::App& cmd, EvalArgs& a) {
  cmd.add_option("--hyp", a.hyp, "Hypotheses, one tokenized sentence per line")->required();
  cmd.add_option("--ref", a.ref, "References, line-aligned with --hyp")->required();
}

void add_bleu_flags(CLI::App& cmd, EvalArgs& a) {
  cmd.add_flag("--smooth", a.smooth, "Add-one smoothing for n >= 2");
  cmd.add_option("--max-n", a.max_n, "Largest n-gram order")->capture_default_str()->check(CLI::PositiveNumber);
}

std::vector<std::size_t> parse_bounds(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& field : split_list(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != field.size()) {
      throw hfaug::Error(hfaug::ErrorCode::InvalidArgument, "bad bucket boundary '" + field + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

void register_metrics_commands(CLI::App& app) {
  {
    auto a = std::make_shared<EvalArgs>();
    auto* cmd = app.add_subcommand("bleu", "Corpus BLEU");
    add_files(*cmd, *a);
    add_bleu_flags(*cmd, *a);
    cmd->callback([a] {
      const auto pairs = hfaug::read_eval_pairs(a->hyp, a->ref);
      fmt::print("{:.4f}\n", hfaug::corpus_bleu(pairs, {a->max_n, a->smooth}));
    });
  }
  {
    auto a = std::make_shared<EvalArgs>();
    auto* cmd = app.add_subcommand("ribes", "Corpus RIBES (mean of sentence scores)");
    add_files(*cmd, *a);
    cmd->add_option("--alpha", a->alpha, "Precision exponent")->capture_default_str();
    cmd->add_option("--beta", a->beta, "Brevity penalty exponent")->capture_default_str();
    cmd->callback([a] {
      const auto pairs = hfaug::read_eval_pairs(a->hyp, a->ref);
      fmt::print("{:.6f}\n", hfaug::corpus_ribes(pairs, {a->alpha, a->beta}));
    });
  }
  {
    auto a = std::make_shared<EvalArgs>();
    auto* cmd = app.add_subcommand("bucket-bleu", "BLEU per reference-length bucket");
    add_files(*cmd, *a);
    add_bleu_flags(*cmd, *a);
    cmd->add_option("--bounds", a->bounds, "Ascending comma-separated upper bounds")->capture_default_str();
    cmd->callback([a] {
      const auto pairs = hfaug::read_eval_pairs(a->hyp, a->ref);
      const auto bounds = parse_bounds(a->bounds);
      fmt::print("bucket\tcount\tbleu\n");
      for (const auto& b : hfaug::bucket_bleu(pairs, bounds, {a->max_n, a->smooth})) {
        fmt::print("{}\t{}\t{}\n", b.label(), b.count, b.bleu ? fmt::format("{:.4f}", *b.bleu) : "null");
      }
    });
  }
}

}  // namespace augment
