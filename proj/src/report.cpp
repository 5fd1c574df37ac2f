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

#include "engage/report.hpp"

#include <cstdio>
#include "json.hpp"

#include "engage/csv.hpp"
#include "engage/error.hpp"

namespace engage {

using nlohmann::ordered_json;

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

ordered_json items_json(const Itemset& s, const ItemUniverse& u) {
  ordered_json arr = ordered_json::array();
  for (ItemId id : s) arr.push_back({{"attribute", u.item(id).attribute}, {"value", u.item(id).value}});
  return arr;
}

std::string config_line(const MiningConfig& c) {
  return "min_support=" + format_number(c.min_support) +
         " min_confidence=" + format_number(c.min_confidence) +
         " min_lift=" + format_number(c.min_lift) + " algorithm=" + to_string(c.algorithm) +
         " grade_bucketing=" + to_string(c.grade_bucketing) +
         " max_rule_len=" + std::to_string(c.max_rule_len);
}

std::string emit_json(const RuleReport& r) {
  ordered_json j;
  j["config"] = {{"min_support", r.config.min_support},
                 {"min_confidence", r.config.min_confidence},
                 {"min_lift", r.config.min_lift},
                 {"algorithm", to_string(r.config.algorithm)},
                 {"grade_bucketing", to_string(r.config.grade_bucketing)},
                 {"max_rule_len", r.config.max_rule_len}};
  j["dataset"] = {{"records", r.record_count}, {"fnv1a64", r.dataset_hash}};
  ordered_json levels = ordered_json::array();
  for (const auto& l : r.levels) {
    ordered_json row = {{"level", std::string(1, to_char(l.level))}, {"students", l.students}};
    row["mean_course_grade"] = l.mean_course_grade ? ordered_json(*l.mean_course_grade) : ordered_json();
    levels.push_back(row);
  }
  j["level_summary"] = levels;
  ordered_json rules = ordered_json::array();
  for (const auto& [rule, m] : r.rules) {
    rules.push_back({{"text", rule.to_string(*r.universe)},
                     {"antecedent", items_json(rule.antecedent, *r.universe)},
                     {"consequent", items_json(rule.consequent, *r.universe)},
                     {"count", m.count_xy},
                     {"antecedent_count", m.count_x},
                     {"consequent_count", m.count_y},
                     {"total", m.total},
                     {"support", m.support},
                     {"confidence", m.confidence},
                     {"lift", m.lift}});
  }
  j["rule_count"] = r.rules.size();
  j["rules"] = rules;
  return j.dump(2) + '\n';
}

std::string emit_csv(const RuleReport& r) {
  std::string out = "antecedent,consequent,support,confidence,lift,count\n";
  for (const auto& [rule, m] : r.rules) {
    out += csv::join({rule.antecedent.to_string(*r.universe), rule.consequent.to_string(*r.universe),
                      format_number(m.support), format_number(m.confidence), format_number(m.lift),
                      std::to_string(m.count_xy)});
    out += '\n';
  }
  return out;
}

std::string emit_text(const RuleReport& r) {
  std::string out = "Association rules\n";
  out += config_line(r.config) + '\n';
  out += "dataset: " + std::to_string(r.record_count) + " records, fnv1a64=" + r.dataset_hash + "\n\n";
  for (const auto& [rule, m] : r.rules) {
    out += rule.to_string(*r.universe) + "  supp=" + fixed3(m.support) + " conf=" + fixed3(m.confidence) +
           " lift=" + fixed3(m.lift) + '\n';
  }
  if (!r.rules.empty()) out += '\n';
  out += "level  students  mean_course_grade\n";
  for (const auto& l : r.levels) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-5c  %8zu  %s\n", to_char(l.level), l.students,
                  l.mean_course_grade ? fixed3(*l.mean_course_grade).c_str() : "n/a");
    out += buf;
  }
  out += '\n' + std::to_string(r.rules.size()) + " rules\n";
  return out;
}

}  // namespace

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "text") return ReportFormat::kText;
  throw Error(ErrorKind::kInvalidSpec, "unknown report format '" + s + "'");
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::array<LevelSummary, 3> summarize_levels(const std::map<std::string, EngagementLevel>& levels,
                                             const std::vector<GradeRecord>& grades) {
  std::array<LevelSummary, 3> out{};
  std::array<double, 3> sum{};
  for (std::size_t i = 0; i < 3; ++i) out[i].level = kLevels[i];
  for (const auto& g : grades) {
    auto it = levels.find(g.student_id);
    if (it == levels.end()) continue;
    const auto idx = static_cast<std::size_t>(
        std::find(kLevels.begin(), kLevels.end(), it->second) - kLevels.begin());
    ++out[idx].students;
    sum[idx] += g.scores[kCourseGradeIndex];
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (out[i].students) out[i].mean_course_grade = sum[i] / static_cast<double>(out[i].students);
  }
  return out;
}

std::string emit_report(const RuleReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: return emit_json(report);
    case ReportFormat::kCsv: return emit_csv(report);
    case ReportFormat::kText: return emit_text(report);
  }
  return {};
}

RuleReport parse_report_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::kParse, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    RuleReport r;
    const auto& c = j.at("config");
    r.config.min_support = c.at("min_support").get<double>();
    r.config.min_confidence = c.at("min_confidence").get<double>();
    r.config.min_lift = c.at("min_lift").get<double>();
    r.config.algorithm = parse_algorithm(c.at("algorithm").get<std::string>());
    r.config.grade_bucketing = parse_grade_bucketing(c.at("grade_bucketing").get<std::string>());
    r.config.max_rule_len = c.at("max_rule_len").get<std::size_t>();
    r.record_count = j.at("dataset").at("records").get<std::size_t>();
    r.dataset_hash = j.at("dataset").at("fnv1a64").get<std::string>();
    const auto& levels = j.at("level_summary");
    for (std::size_t i = 0; i < 3 && i < levels.size(); ++i) {
      const auto lvl = parse_level(levels[i].at("level").get<std::string>());
      if (!lvl) throw Error(ErrorKind::kParse, "bad level in report");
      r.levels[i].level = *lvl;
      r.levels[i].students = levels[i].at("students").get<std::size_t>();
      if (!levels[i].at("mean_course_grade").is_null()) {
        r.levels[i].mean_course_grade = levels[i].at("mean_course_grade").get<double>();
      }
    }

    std::vector<std::vector<Item>> sides;
    for (const auto& rule : j.at("rules")) {
      for (const char* side : {"antecedent", "consequent"}) {
        std::vector<Item> items;
        for (const auto& it : rule.at(side)) {
          items.push_back({it.at("attribute").get<std::string>(), it.at("value").get<std::string>()});
        }
        sides.push_back(std::move(items));
      }
    }
    r.universe = std::make_shared<const ItemUniverse>(ItemUniverse::infer(sides));
    std::size_t s = 0;
    for (const auto& rule : j.at("rules")) {
      auto to_set = [&](const std::vector<Item>& items) {
        std::vector<ItemId> ids;
        for (const auto& it : items) ids.push_back(r.universe->id(it));
        return Itemset(std::move(ids));
      };
      AssociationRule ar(to_set(sides[s]), to_set(sides[s + 1]));
      s += 2;
      RuleMetrics m;
      m.count_xy = rule.at("count").get<std::uint64_t>();
      m.count_x = rule.at("antecedent_count").get<std::uint64_t>();
      m.count_y = rule.at("consequent_count").get<std::uint64_t>();
      m.total = rule.at("total").get<std::uint64_t>();
      m.support = rule.at("support").get<double>();
      m.confidence = rule.at("confidence").get<double>();
      m.lift = rule.at("lift").get<double>();
      r.rules.emplace_back(std::move(ar), m);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace engage
