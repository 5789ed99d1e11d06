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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hfaug {

using Sentence = std::vector<std::string>;

// Splits on runs of ASCII whitespace; never yields empty tokens.
Sentence split_whitespace(std::string_view line);

std::vector<std::string> split(std::string_view text, char sep);

std::string join(std::span<const std::string> tokens, std::string_view sep = " ");

std::string_view trim(std::string_view text) noexcept;

// ASCII-only; bytes >= 0x80 pass through so UTF-8 stays intact.
std::string ascii_lower(std::string_view text);

// Both throw Error{Io} when the file cannot be opened.
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_lines(const std::filesystem::path& path, std::span<const std::string> lines);

std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace hfaug
