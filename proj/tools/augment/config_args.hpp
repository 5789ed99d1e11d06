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
#include <string>
#include <vector>

namespace augment {

// Reads key=value lines ('#' comments and blank lines allowed). Keys may be
// written with or without leading dashes.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

// Expands --config FILE (or --config=FILE) found in `args`. Each key from the
// file that does not already appear on the command line is inserted as
// --key=value directly after the subcommand, so explicit flags always win.
// args[0] is the program name and args[1] the subcommand.
std::vector<std::string> merge_config_args(const std::vector<std::string>& args);

}  // namespace augment
