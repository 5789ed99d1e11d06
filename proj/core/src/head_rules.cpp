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

#include "hfaug/head_rules.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "hfaug/error.hpp"

namespace hfaug {

namespace {

SearchDirection parse_direction(std::string_view s, std::size_t line) {
  if (s == "left") return SearchDirection::Left;
  if (s == "right") return SearchDirection::Right;
  throw Error(ErrorCode::BadHeadRules,
              "line " + std::to_string(line) + ": direction must be left|right, got '" +
                  std::string(s) + "'");
}

void resolve_in_place(ConstituencyTree& node, const HeadRuleTable& rules,
                      std::vector<std::string>& scratch) {
  if (node.is_leaf()) return;
  for (auto& c : node.children) resolve_in_place(c, rules, scratch);
  scratch.clear();
  for (const auto& c : node.children) scratch.push_back(c.label);
  node.head_index = rules.select_head(node.label, scratch);
}

}  // namespace

HeadRuleTable HeadRuleTable::parse(std::string_view text) {
  std::optional<HeadRule> def;
  std::map<std::string, HeadRule, std::less<>> rules;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorCode::BadHeadRules,
                  "line " + std::to_string(line_no) + ": expected LABEL<TAB>dir[<TAB>cats]");
    }
    const std::string label(trim(fields[0]));
    if (label.empty()) {
      throw Error(ErrorCode::BadHeadRules, "line " + std::to_string(line_no) + ": empty label");
    }
    HeadRule rule;
    rule.direction = parse_direction(trim(fields[1]), line_no);
    if (fields.size() == 3) {
      for (const auto& level : split(fields[2], ',')) {
        std::vector<std::string> cats;
        for (const auto& cat : split(level, '|')) {
          auto c = trim(cat);
          if (!c.empty()) cats.emplace_back(c);
        }
        if (!cats.empty()) rule.priority.push_back(std::move(cats));
      }
    }
    if (label == "DEFAULT") {
      def = std::move(rule);
    } else {
      rules.insert_or_assign(label, std::move(rule));
    }
  }
  if (!def) throw Error(ErrorCode::BadHeadRules, "missing DEFAULT rule");
  HeadRuleTable table(std::move(*def));
  table.rules_ = std::move(rules);
  return table;
}

HeadRuleTable HeadRuleTable::load(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void HeadRuleTable::set_rule(std::string label, HeadRule rule) {
  rules_.insert_or_assign(std::move(label), std::move(rule));
}

const HeadRule& HeadRuleTable::rule_for(std::string_view label) const {
  auto it = rules_.find(base_label(label));
  return it == rules_.end() ? default_ : it->second;
}

std::size_t HeadRuleTable::select_head(std::string_view parent_label,
                                       std::span<const std::string> child_labels) const {
  const std::size_t n = child_labels.size();
  if (n <= 1) return 0;
  const HeadRule& rule = rule_for(parent_label);
  const bool from_left = rule.direction == SearchDirection::Left;
  auto at = [&](std::size_t step) { return from_left ? step : n - 1 - step; };

  for (const auto& level : rule.priority) {
    for (std::size_t s = 0; s < n; ++s) {
      std::string_view child = base_label(child_labels[at(s)]);
      if (is_punctuation_label(child)) continue;
      for (const auto& cat : level) {
        if (child == cat) return at(s);
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (!is_punctuation_label(base_label(child_labels[at(s)]))) return at(s);
  }
  return at(0);
}

ConstituencyTree resolve_heads(ConstituencyTree tree, const HeadRuleTable& rules) {
  std::vector<std::string> scratch;
  resolve_in_place(tree, rules, scratch);
  return tree;
}

bool heads_resolved(const ConstituencyTree& tree) {
  bool ok = true;
  for_each_node(tree, [&](const ConstituencyTree& n) {
    if (!n.is_leaf() && (!n.head_index || *n.head_index >= n.children.size())) ok = false;
  });
  return ok;
}

}  // namespace hfaug
