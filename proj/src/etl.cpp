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

#include "engage/etl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "engage/csv.hpp"
#include "engage/error.hpp"

namespace engage {

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// Maps each expected column to its position in the header row.
std::vector<std::size_t> column_positions(const std::vector<std::string>& header,
                                          std::span<const std::string_view> expected,
                                          std::size_t line) {
  std::vector<std::size_t> pos(expected.size(), SIZE_MAX);
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto it = std::find(expected.begin(), expected.end(), header[i]);
    if (it == expected.end()) {
      throw Error(ErrorKind::kParse, at_line(line) + "unknown column '" + header[i] + "'");
    }
    const auto col = static_cast<std::size_t>(it - expected.begin());
    if (pos[col] != SIZE_MAX) {
      throw Error(ErrorKind::kParse, at_line(line) + "repeated column '" + header[i] + "'");
    }
    pos[col] = i;
  }
  for (std::size_t c = 0; c < expected.size(); ++c) {
    if (pos[c] == SIZE_MAX) {
      throw Error(ErrorKind::kParse, at_line(line) + "missing column '" + std::string(expected[c]) + "'");
    }
  }
  return pos;
}

Timestamp timestamp_at(const std::string& text, std::size_t line, std::string_view column) {
  try {
    return parse_timestamp(text);
  } catch (const Error&) {
    throw Error(ErrorKind::kParse,
                at_line(line) + "unparseable " + std::string(column) + " '" + text + "'");
  }
}

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// Input files

std::vector<EventRecord> parse_event_log(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw Error(ErrorKind::kParse, "event log has no header row");
  const auto pos = column_positions(fields, kEventColumns, reader.line_number());

  std::vector<EventRecord> out;
  while (reader.next(fields)) {
    const auto line = reader.line_number();
    if (fields.size() != kEventColumns.size()) {
      throw Error(ErrorKind::kParse, at_line(line) + "expected 6 fields, got " +
                                         std::to_string(fields.size()));
    }
    EventRecord r;
    r.event_date = timestamp_at(fields[pos[0]], line, "event_date");
    r.event_type = fields[pos[1]];
    r.event_location = fields[pos[2]];
    if (!fields[pos[3]].empty()) r.session_start = timestamp_at(fields[pos[3]], line, "session_start");
    if (!fields[pos[4]].empty()) r.session_end = timestamp_at(fields[pos[4]], line, "session_end");
    r.student_id = fields[pos[5]];
    if (r.event_type.empty()) throw Error(ErrorKind::kParse, at_line(line) + "empty event_type");
    if (r.student_id.empty()) throw Error(ErrorKind::kParse, at_line(line) + "empty student_id");
    if ((r.session_start && *r.session_start > r.event_date) ||
        (r.session_end && r.event_date > *r.session_end)) {
      throw Error(ErrorKind::kRange, at_line(line) + "event_date lies outside its session");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GradeRecord> parse_grades(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw Error(ErrorKind::kParse, "grades file has no header row");
  std::array<std::string_view, 1 + kGradeCount> columns{};
  columns[0] = "student_id";
  std::copy(kGradeColumns.begin(), kGradeColumns.end(), columns.begin() + 1);
  const auto pos = column_positions(fields, columns, reader.line_number());

  std::vector<GradeRecord> out;
  std::set<std::string> seen;
  while (reader.next(fields)) {
    const auto line = reader.line_number();
    if (fields.size() != columns.size()) {
      throw Error(ErrorKind::kParse, at_line(line) + "expected 8 fields, got " +
                                         std::to_string(fields.size()));
    }
    GradeRecord g;
    g.student_id = fields[pos[0]];
    if (g.student_id.empty()) throw Error(ErrorKind::kParse, at_line(line) + "empty student_id");
    if (!seen.insert(g.student_id).second) {
      throw Error(ErrorKind::kDuplicateKey, at_line(line) + "duplicate student_id '" + g.student_id + "'");
    }
    for (std::size_t i = 0; i < kGradeCount; ++i) {
      const auto& text = fields[pos[i + 1]];
      const auto v = parse_double(text);
      if (!v) {
        throw Error(ErrorKind::kParse, at_line(line) + "unparseable " + std::string(kGradeColumns[i]) +
                                           " '" + text + "'");
      }
      if (*v < 0.0 || *v > 100.0) {
        throw Error(ErrorKind::kRange, at_line(line) + std::string(kGradeColumns[i]) + " " + text +
                                           " outside [0, 100]");
      }
      g.scores[i] = *v;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string write_grades_csv(const std::vector<GradeRecord>& grades) {
  std::string out = "student_id";
  for (auto c : kGradeColumns) (out += ',') += c;
  out += '\n';
  for (const auto& g : grades) {
    out += csv::escape(g.student_id);
    for (double s : g.scores) (out += ',') += format_number(s);
    out += '\n';
  }
  return out;
}

std::string write_events_csv(const std::vector<EventRecord>& events) {
  std::string out;
  for (std::size_t i = 0; i < kEventColumns.size(); ++i) {
    if (i) out += ',';
    out += kEventColumns[i];
  }
  out += '\n';
  for (const auto& e : events) {
    out += format_timestamp(e.event_date);
    (out += ',') += csv::escape(e.event_type);
    (out += ',') += csv::escape(e.event_location);
    out += ',';
    if (e.session_start) out += format_timestamp(*e.session_start);
    out += ',';
    if (e.session_end) out += format_timestamp(*e.session_end);
    (out += ',') += csv::escape(e.student_id);
    out += '\n';
  }
  return out;
}

CourseConfig parse_course_config(std::istream& in) {
  CourseConfig config;
  std::array<bool, 3> found{};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line.front() == '[') continue;  // section headers carry no data

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::kParse, at_line(n) + "expected key = value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    bool known = false;
    for (std::size_t a = 0; a < 3; ++a) {
      if (key == "assignment" + std::to_string(a + 1) + "_posted") {
        config.assignment_posted[a] = timestamp_at(value, n, key);
        found[a] = true;
        known = true;
      }
    }
    if (!known) throw Error(ErrorKind::kParse, at_line(n) + "unknown key '" + key + "'");
  }
  for (std::size_t a = 0; a < 3; ++a) {
    if (!found[a]) {
      throw Error(ErrorKind::kParse,
                  "course config lacks assignment" + std::to_string(a + 1) + "_posted");
    }
  }
  return config;
}

std::string format_course_config(const CourseConfig& config) {
  std::string out = "# Assignment posting times (ISO-8601, UTC)\n[assignments]\n";
  for (std::size_t a = 0; a < 3; ++a) {
    out += "assignment" + std::to_string(a + 1) + "_posted = \"" +
           format_timestamp(config.assignment_posted[a]) + "\"\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engagement metrics

std::array<std::optional<double>, kMetricCount> EngagementMetrics::values() const {
  return {static_cast<double>(num_logins),
          static_cast<double>(num_content_reads),
          static_cast<double>(num_forum_reads),
          static_cast<double>(num_forum_posts),
          static_cast<double>(num_quiz_reviews),
          assign_dur_h[0],
          assign_dur_h[1],
          assign_dur_h[2],
          avg_assign_dur_h};
}

EngagementMetrics compute_engagement_metrics(const EventSequence& events,
                                             const std::array<Timestamp, 3>& assignment_posted) {
  EngagementMetrics m;
  std::array<std::optional<Timestamp>, 3> last_submission;
  for (const auto& e : events.events) {
    if (e.type == event_type::kLogin) {
      ++m.num_logins;
    } else if (e.type == event_type::kContentRead) {
      ++m.num_content_reads;
    } else if (e.type == event_type::kForumRead) {
      ++m.num_forum_reads;
    } else if (e.type == event_type::kForumPost) {
      ++m.num_forum_posts;
    } else if (e.type == event_type::kQuizReview) {
      ++m.num_quiz_reviews;
    } else {
      for (std::size_t a = 0; a < 3; ++a) {
        if (e.type == event_type::kAssignmentSubmit[a]) {
          if (!last_submission[a] || e.at >= *last_submission[a]) last_submission[a] = e.at;
        }
      }
    }
  }

  double sum = 0.0;
  int present = 0;
  for (std::size_t a = 0; a < 3; ++a) {
    if (!last_submission[a]) continue;
    // A submission logged before the posting time counts as immediate.
    const double h = std::max(0.0, hours_between(assignment_posted[a], *last_submission[a]));
    m.assign_dur_h[a] = h;
    sum += h;
    ++present;
  }
  if (present > 0) m.avg_assign_dur_h = sum / present;
  return m;
}

MetricsTable compute_all_metrics(const std::vector<EventSequence>& sequences,
                                 const CourseConfig& config) {
  MetricsTable out;
  for (const auto& s : sequences) {
    out[s.student_id] = compute_engagement_metrics(s, config.assignment_posted);
  }
  return out;
}

std::string write_metrics_csv(const MetricsTable& metrics) {
  std::string out = "student_id";
  for (auto c : kMetricColumns) (out += ',') += c;
  out += '\n';
  for (const auto& [id, m] : metrics) {
    out += csv::escape(id);
    for (const auto& v : m.values()) {
      out += ',';
      if (v) out += format_number(*v);
    }
    out += '\n';
  }
  return out;
}

MetricsTable parse_metrics_csv(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw Error(ErrorKind::kParse, "metrics file has no header row");
  std::array<std::string_view, 1 + kMetricCount> columns{};
  columns[0] = "student_id";
  std::copy(kMetricColumns.begin(), kMetricColumns.end(), columns.begin() + 1);
  const auto pos = column_positions(fields, columns, reader.line_number());

  MetricsTable out;
  while (reader.next(fields)) {
    const auto line = reader.line_number();
    if (fields.size() != columns.size()) {
      throw Error(ErrorKind::kParse, at_line(line) + "expected 10 fields, got " +
                                         std::to_string(fields.size()));
    }
    std::array<std::optional<double>, kMetricCount> v;
    for (std::size_t i = 0; i < kMetricCount; ++i) {
      const auto& text = fields[pos[i + 1]];
      if (text.empty() && i >= kCountMetricCount) continue;
      v[i] = parse_double(text);
      if (!v[i] || *v[i] < 0.0) {
        throw Error(ErrorKind::kParse, at_line(line) + "bad " + std::string(kMetricColumns[i]) +
                                           " '" + text + "'");
      }
    }
    EngagementMetrics m;
    m.num_logins = static_cast<std::uint64_t>(*v[0]);
    m.num_content_reads = static_cast<std::uint64_t>(*v[1]);
    m.num_forum_reads = static_cast<std::uint64_t>(*v[2]);
    m.num_forum_posts = static_cast<std::uint64_t>(*v[3]);
    m.num_quiz_reviews = static_cast<std::uint64_t>(*v[4]);
    m.assign_dur_h = {v[5], v[6], v[7]};
    m.avg_assign_dur_h = v[8];
    const auto& id = fields[pos[0]];
    if (!out.emplace(id, m).second) {
      throw Error(ErrorKind::kDuplicateKey, at_line(line) + "duplicate student_id '" + id + "'");
    }
  }
  return out;
}

std::int64_t discretize(double value) {
  if (!(value >= 0.0)) throw Error(ErrorKind::kDomain, "cannot discretize a negative value");
  return static_cast<std::int64_t>(std::floor(value / 10.0 + 0.5)) * 10;
}

std::vector<std::string> range_warnings(const MetricsTable& metrics) {
  std::vector<std::string> out;
  for (const auto& [id, m] : metrics) {
    const auto values = m.values();
    for (std::size_t i = 0; i < kMetricCount; ++i) {
      if (!values[i]) continue;
      const auto d = discretize(*values[i]);
      if (static_cast<double>(d) > kMetricSoftMax[i]) {
        out.push_back("student " + id + ": " + std::string(kMetricColumns[i]) + " = " +
                      std::to_string(d) + " exceeds the expected range [0, " +
                      format_number(kMetricSoftMax[i]) + "]");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dataset assembly

std::vector<std::string> StudentFeatureVector::fields() const {
  std::vector<std::string> out;
  out.reserve(kFieldCount);
  out.push_back(student_id);
  for (const auto& v : metrics) out.push_back(v ? std::to_string(*v) : std::string());
  out.push_back(level ? std::string(1, to_char(*level)) : std::string());
  for (const auto& v : grades) out.push_back(v ? std::to_string(*v) : std::string());
  return out;
}

std::vector<std::string> dataset_columns() {
  std::vector<std::string> out{"student_id"};
  for (auto c : kMetricColumns) out.emplace_back(c);
  out.emplace_back("engagement_level");
  for (auto c : kGradeColumns) out.emplace_back(c);
  return out;
}

AssembledDataset assemble_dataset(const MetricsTable& metrics,
                                  const std::map<std::string, EngagementLevel>& levels,
                                  const std::vector<GradeRecord>& grades, bool keep_partial) {
  std::map<std::string, const GradeRecord*> by_id;
  for (const auto& g : grades) {
    if (!by_id.emplace(g.student_id, &g).second) {
      throw Error(ErrorKind::kDuplicateKey, "duplicate grade record for '" + g.student_id + "'");
    }
  }

  std::set<std::string> ids;
  for (const auto& [id, m] : metrics) ids.insert(id);
  for (const auto& [id, g] : by_id) ids.insert(id);

  AssembledDataset out;
  for (const auto& id : ids) {
    const auto m = metrics.find(id);
    const auto g = by_id.find(id);
    const bool has_metrics = m != metrics.end();
    const bool has_grades = g != by_id.end();
    if (!has_metrics || !has_grades) {
      out.reconciliation.push_back(
          {id, has_metrics ? "no grade record" : "no events in the event log"});
      if (!keep_partial) continue;
    }

    StudentFeatureVector v;
    v.student_id = id;
    if (has_metrics) {
      const auto lvl = levels.find(id);
      if (lvl == levels.end()) {
        throw Error(ErrorKind::kMissingInput, "no engagement level for student '" + id + "'");
      }
      v.level = lvl->second;
      const auto values = m->second.values();
      for (std::size_t i = 0; i < kMetricCount; ++i) {
        if (values[i]) v.metrics[i] = discretize(*values[i]);
      }
    }
    if (has_grades) {
      for (std::size_t i = 0; i < kGradeCount; ++i) v.grades[i] = discretize(g->second->scores[i]);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::string write_dataset_csv(const std::vector<StudentFeatureVector>& vectors) {
  std::string out = csv::join(dataset_columns()) + '\n';
  for (const auto& v : vectors) out += csv::join(v.fields()) + '\n';
  return out;
}

std::string write_reconciliation_csv(const std::vector<ReconciliationEntry>& entries) {
  std::string out = "student_id,reason\n";
  for (const auto& e : entries) out += csv::escape(e.student_id) + ',' + csv::escape(e.reason) + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Item encoding

std::string grade_band(std::int64_t rounded) {
  if (rounded < 50) return "<50";
  if (rounded < 70) return "50-69";
  if (rounded < 90) return "70-89";
  return ">=90";
}

bool is_grade_attribute(std::string_view attribute) {
  return std::find(kGradeAttributes.begin(), kGradeAttributes.end(), attribute) !=
         kGradeAttributes.end();
}

bool is_engagement_attribute(std::string_view attribute) {
  return attribute == kLevelAttribute ||
         std::find(kMetricAttributes.begin(), kMetricAttributes.end(), attribute) !=
             kMetricAttributes.end();
}

TransactionDb encode_dataset(const std::vector<StudentFeatureVector>& vectors,
                             GradeBucketing bucketing) {
  std::map<std::string, std::vector<std::string>> domains;
  std::map<std::string, std::set<std::int64_t>> numeric;
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < kMetricCount; ++i) {
      if (v.metrics[i]) numeric[std::string(kMetricAttributes[i])].insert(*v.metrics[i]);
    }
    if (bucketing == GradeBucketing::kExact10s) {
      for (std::size_t i = 0; i < kGradeCount; ++i) {
        if (v.grades[i]) numeric[std::string(kGradeAttributes[i])].insert(*v.grades[i]);
      }
    }
  }
  for (const auto& [attribute, values] : numeric) {
    auto& d = domains[attribute];
    for (auto x : values) d.push_back(std::to_string(x));
  }
  domains[std::string(kLevelAttribute)] = {"L", "M", "H"};
  if (bucketing == GradeBucketing::kBanded) {
    for (auto a : kGradeAttributes) domains[std::string(a)] = {"<50", "50-69", "70-89", ">=90"};
  }
  auto universe = std::make_shared<const ItemUniverse>(domains);

  std::vector<Itemset> transactions;
  std::vector<std::string> ids;
  transactions.reserve(vectors.size());
  ids.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<ItemId> items;
    for (std::size_t i = 0; i < kMetricCount; ++i) {
      if (v.metrics[i]) {
        items.push_back(universe->id({std::string(kMetricAttributes[i]), std::to_string(*v.metrics[i])}));
      }
    }
    if (v.level) items.push_back(universe->id({std::string(kLevelAttribute), std::string(1, to_char(*v.level))}));
    for (std::size_t i = 0; i < kGradeCount; ++i) {
      if (!v.grades[i]) continue;
      const std::string value = bucketing == GradeBucketing::kBanded ? grade_band(*v.grades[i])
                                                                      : std::to_string(*v.grades[i]);
      items.push_back(universe->id({std::string(kGradeAttributes[i]), value}));
    }
    transactions.emplace_back(std::move(items));
    ids.push_back(v.student_id);
  }
  return TransactionDb(std::move(universe), std::move(transactions), std::move(ids));
}

}  // namespace engage
