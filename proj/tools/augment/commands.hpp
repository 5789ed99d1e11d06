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

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "hfaug/reorder.hpp"

namespace augment {

template <typename... Args>
void log(fmt::format_string<Args...> f, Args&&... args) {
  fmt::print(stderr, "augment: {}\n", fmt::format(f, std::forward<Args>(args)...));
}

// Splits a comma-separated flag value, dropping empty fields.
std::vector<std::string> split_list(std::string_view value);

// Reorder flags shared by `reorder` and `build-pseudo`.
struct ReorderFlags {
  bool no_drop_determiners = false;
  std::string sbj_token = "<sbj>";
  std::string obj_token = "<obj>";

  void add_to(CLI::App& cmd);
  hfaug::ReorderConfig config() const;
};

// Writes `<output>.skipped` with one `line<TAB>error` row per skipped entry.
void write_skip_report(const std::filesystem::path& output,
                       const std::vector<hfaug::SkipEntry>& skipped);

void register_lexicon_commands(CLI::App& app);
void register_metrics_commands(CLI::App& app);
void register_pipeline_commands(CLI::App& app);
void register_filter_command(CLI::App& app);

}  // namespace augment
