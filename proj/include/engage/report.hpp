// Copyright 2026 The engage-miner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "engage/etl.hpp"
#include "engage/itemset.hpp"
#include "engage/mining.hpp"
#include "engage/records.hpp"

namespace engage {

struct LevelSummary {
  EngagementLevel level = EngagementLevel::kLow;
  std::size_t students = 0;
  std::optional<double> mean_course_grade;  // raw grades, before rounding
};

struct RuleReport {
  MiningConfig config;
  std::shared_ptr<const ItemUniverse> universe;
  std::vector<ScoredRule> rules;  // rule_order
  std::array<LevelSummary, 3> levels{};
  std::size_t record_count = 0;
  std::string dataset_hash;  // FNV-1a 64 of the dataset bytes, hex
};

enum class ReportFormat { kJson, kCsv, kText };
ReportFormat parse_report_format(const std::string& s);

std::string fnv1a64_hex(std::string_view bytes);

// Mean raw course grade of the students labeled with each level.
std::array<LevelSummary, 3> summarize_levels(const std::map<std::string, EngagementLevel>& levels,
                                             const std::vector<GradeRecord>& grades);

std::string emit_report(const RuleReport& report, ReportFormat format);

// Reads a report written with ReportFormat::kJson. Items are re-declared in
// a universe built from the rules, so labels and order are preserved.
RuleReport parse_report_json(const std::string& text);

}  // namespace engage
