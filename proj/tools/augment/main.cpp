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

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config_args.hpp"
#include "hfaug/error.hpp"
#include "hfaug/text.hpp"

namespace augment {

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  for (auto& field : hfaug::split(value, ',')) {
    auto t = hfaug::trim(field);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

void ReorderFlags::add_to(CLI::App& cmd) {
  cmd.add_flag("--no-drop-determiners", no_drop_determiners, "Keep DT leaves in the reordered output");
  cmd.add_option("--sbj-token", sbj_token, "Token inserted after subjects")->capture_default_str();
  cmd.add_option("--obj-token", obj_token, "Token inserted after objects")->capture_default_str();
}

hfaug::ReorderConfig ReorderFlags::config() const {
  hfaug::ReorderConfig cfg;
  cfg.subject_marker = sbj_token;
  cfg.object_marker = obj_token;
  if (no_drop_determiners) cfg.drop_determiner_labels.clear();
  cfg.validate();
  return cfg;
}

void write_skip_report(const std::filesystem::path& output,
                       const std::vector<hfaug::SkipEntry>& skipped) {
  auto path = output;
  path += ".skipped";
  auto out = hfaug::open_output(path);
  for (const auto& s : skipped) out << s.line << '\t' << s.error << '\n';
  if (!out) throw hfaug::Error(hfaug::ErrorCode::Io, "failed writing " + path.string());
}

}  // namespace augment

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-parallel corpus construction by head-final reordering and lexical translation",
               "augment"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  augment::register_pipeline_commands(app);
  augment::register_lexicon_commands(app);
  augment::register_filter_command(app);
  augment::register_metrics_commands(app);
  for (auto* sub : app.get_subcommands({})) {
    // Consumed by merge_config_args; declared so --help lists it.
    sub->add_option("--config", "File of key=value lines mirroring the flags");
  }

  const std::string sub_name = argc > 1 ? argv[1] : "";
  try {
    std::vector<std::string> args(argv, argv + argc);
    args = augment::merge_config_args(args);
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "augment %s: error: %s\n", sub_name.c_str(), e.what());
    return 1;
  }
  return 0;
}
