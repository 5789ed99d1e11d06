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

#include "config_args.hpp"

#include <algorithm>
#include <set>

#include "hfaug/error.hpp"
#include "hfaug/text.hpp"

namespace augment {

std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  for (const auto& raw : hfaug::read_lines(path)) {
    ++line_no;
    const auto line = hfaug::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw hfaug::Error(hfaug::ErrorCode::InvalidArgument,
                         path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key(hfaug::trim(line.substr(0, eq)));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty()) {
      throw hfaug::Error(hfaug::ErrorCode::InvalidArgument,
                         path.string() + ":" + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(std::move(key), std::string(hfaug::trim(line.substr(eq + 1))));
  }
  return out;
}

std::vector<std::string> merge_config_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::set<std::string> given;
  std::string config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config" && i + 1 < args.size()) {
      config = args[++i];
      continue;
    }
    if (a.rfind("--config=", 0) == 0) {
      config = a.substr(9);
      continue;
    }
    if (a.rfind("--", 0) == 0 && a.size() > 2) given.insert(a.substr(2, a.find('=') - 2));
    else if (a.rfind("-", 0) == 0 && a.size() == 2) given.insert(a.substr(1));
    out.push_back(a);
  }
  if (config.empty()) return out;
  std::vector<std::string> from_file;
  for (const auto& [key, value] : read_config_file(config)) {
    if (!given.contains(key)) from_file.push_back("--" + key + "=" + value);
  }
  // File values go right after the subcommand so that anything given on the
  // command line is parsed later and takes precedence under an alias.
  const auto at = out.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(2, out.size()));
  out.insert(at, from_file.begin(), from_file.end());
  return out;
}

}  // namespace augment
