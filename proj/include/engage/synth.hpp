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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "engage/etl.hpp"
#include "engage/records.hpp"

namespace engage {

struct GradeModel {
  double mean = 0.0;
  double sigma = 0.0;
};

// Activity and grade profile of one planted engagement level.
struct LevelProfile {
  // Inclusive count ranges for the five frequency metrics (kMetricColumns order).
  std::array<std::pair<std::uint32_t, std::uint32_t>, kCountMetricCount> count_ranges{};
  // Posting-to-submission hours per assignment.
  std::array<std::pair<double, double>, 3> duration_ranges_h{};
  // Chance that a given assignment is never submitted.
  double missing_submission_rate = 0.0;
  // Draws are normal, resampled until within two sigma, then clamped to [0, 100].
  std::array<GradeModel, kGradeCount> grades{};
};

struct CohortSpec {
  std::size_t n_students = 500;
  std::uint64_t seed = 1;
  std::array<double, 3> level_mix{0.3, 0.4, 0.3};  // L, M, H
  std::array<LevelProfile, 3> levels{};            // L, M, H
  // Probability that a student's grades come from their own level's model.
  // Otherwise each grade is drawn from the model of an independently
  // sampled level, so 0 makes grades independent of engagement.
  double implication_strength = 1.0;
  Timestamp course_start{};
  std::size_t course_days = 112;
  CourseConfig course{};

  // Well-separated L/M/H profiles; H grades sit in the >= 90 bucket.
  static CohortSpec defaults(std::size_t n_students = 500, std::uint64_t seed = 1);
  void validate() const;  // throws kInvalidSpec
};

struct Cohort {
  std::string events_csv;
  std::string grades_csv;
  std::string ground_truth_csv;  // student_id,true_level
  std::string course_config;
  std::vector<std::pair<std::string, EngagementLevel>> truth;
};

// Deterministic for a given spec (seeded MT19937-64).
Cohort generate_cohort(const CohortSpec& spec);

}  // namespace engage
