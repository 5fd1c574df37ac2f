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
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "engage/itemset.hpp"
#include "engage/mining.hpp"
#include "engage/records.hpp"

namespace engage {

// ---------------------------------------------------------------------------
// Input files

inline constexpr std::array<std::string_view, 6> kEventColumns = {
    "event_date", "event_type", "event_location", "session_start", "session_end", "student_id"};

// events.csv. Session timestamps may be empty; when present they must
// bracket event_date. Errors cite the 1-based file line.
std::vector<EventRecord> parse_event_log(std::istream& in);

// grades.csv: student_id plus seven scores in [0, 100], one row per student.
std::vector<GradeRecord> parse_grades(std::istream& in);
std::string write_grades_csv(const std::vector<GradeRecord>& grades);
std::string write_events_csv(const std::vector<EventRecord>& events);

// Posting times of the three assignments, read from a small TOML-style file:
//
//   [assignments]
//   assignment1_posted = "2024-01-22T09:00:00"
//   assignment2_posted = "..."
//   assignment3_posted = "..."
struct CourseConfig {
  std::array<Timestamp, 3> assignment_posted{};
};

CourseConfig parse_course_config(std::istream& in);
std::string format_course_config(const CourseConfig& config);

// ---------------------------------------------------------------------------
// Engagement metrics

inline constexpr std::size_t kMetricCount = 9;
inline constexpr std::size_t kCountMetricCount = 5;
inline constexpr std::array<std::string_view, kMetricCount> kMetricColumns = {
    "num_logins",    "num_content_reads", "num_forum_reads", "num_forum_posts", "num_quiz_reviews",
    "assign1_dur_h", "assign2_dur_h",     "assign3_dur_h",   "avg_assign_dur_h"};

// Upper ends of the value ranges seen in the original course. Values above
// them only produce warnings.
inline constexpr std::array<double, kMetricCount> kMetricSoftMax = {650, 1010, 60,  10, 10,
                                                                    580, 300,  630, 500};

struct EngagementMetrics {
  std::uint64_t num_logins = 0;
  std::uint64_t num_content_reads = 0;
  std::uint64_t num_forum_reads = 0;
  std::uint64_t num_forum_posts = 0;
  std::uint64_t num_quiz_reviews = 0;
  // Hours from posting to the last submission; absent when never submitted.
  std::array<std::optional<double>, 3> assign_dur_h;
  // Mean of the present durations.
  std::optional<double> avg_assign_dur_h;

  // The nine metrics in kMetricColumns order.
  std::array<std::optional<double>, kMetricCount> values() const;

  friend bool operator==(const EngagementMetrics&, const EngagementMetrics&) = default;
};

EngagementMetrics compute_engagement_metrics(const EventSequence& events,
                                             const std::array<Timestamp, 3>& assignment_posted);

// Per-student metrics keyed by student id.
using MetricsTable = std::map<std::string, EngagementMetrics>;

MetricsTable compute_all_metrics(const std::vector<EventSequence>& sequences,
                                 const CourseConfig& config);

std::string write_metrics_csv(const MetricsTable& metrics);
MetricsTable parse_metrics_csv(std::istream& in);

// Nearest multiple of 10, halves rounded up. Throws kDomain on negatives.
std::int64_t discretize(double value);

// One warning per discretized metric above kMetricSoftMax.
std::vector<std::string> range_warnings(const MetricsTable& metrics);

// ---------------------------------------------------------------------------
// The merged 18-feature dataset

struct StudentFeatureVector {
  static constexpr std::size_t kFieldCount = 1 + kMetricCount + 1 + kGradeCount;

  std::string student_id;
  std::array<std::optional<std::int64_t>, kMetricCount> metrics;
  std::optional<EngagementLevel> level;
  std::array<std::optional<std::int64_t>, kGradeCount> grades;

  // Rendered fields, absent values empty. Always kFieldCount entries.
  std::vector<std::string> fields() const;

  friend bool operator==(const StudentFeatureVector&, const StudentFeatureVector&) = default;
};

std::vector<std::string> dataset_columns();

struct ReconciliationEntry {
  std::string student_id;
  std::string reason;
};

struct AssembledDataset {
  std::vector<StudentFeatureVector> vectors;  // sorted by student_id
  std::vector<ReconciliationEntry> reconciliation;
};

// Joins metrics, levels and grades on student id and discretizes every
// numeric field. Students missing from either side are reported and, unless
// keep_partial, dropped. Throws kMissingInput when a kept student with
// metrics has no level.
AssembledDataset assemble_dataset(const MetricsTable& metrics,
                                  const std::map<std::string, EngagementLevel>& levels,
                                  const std::vector<GradeRecord>& grades, bool keep_partial = false);

std::string write_dataset_csv(const std::vector<StudentFeatureVector>& vectors);
std::string write_reconciliation_csv(const std::vector<ReconciliationEntry>& entries);

// ---------------------------------------------------------------------------
// Item encoding

inline constexpr std::array<std::string_view, kMetricCount> kMetricAttributes = {
    "NumLogins",       "NumContentReads", "NumForumReads",   "NumForumPosts",    "NumQuizReviews",
    "Assign1Duration", "Assign2Duration", "Assign3Duration", "AvgAssignDuration"};
inline constexpr std::string_view kLevelAttribute = "EngagementLevel";
inline constexpr std::array<std::string_view, kGradeCount> kGradeAttributes = {
    "Assignment1", "Assignment2", "Assignment3", "Quiz1", "Midterm", "FinalExam", "CourseGrade"};

// Band label for a rounded grade: "<50", "50-69", "70-89" or ">=90".
std::string grade_band(std::int64_t rounded);

bool is_grade_attribute(std::string_view attribute);
bool is_engagement_attribute(std::string_view attribute);

// One transaction per vector; absent fields contribute no item. Student ids
// become record ids and are not items.
TransactionDb encode_dataset(const std::vector<StudentFeatureVector>& vectors,
                             GradeBucketing bucketing);

// Shortest decimal text that reads back as the same double.
std::string format_number(double v);

}  // namespace engage
