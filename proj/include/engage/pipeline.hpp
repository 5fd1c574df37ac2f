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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "engage/mining.hpp"
#include "engage/report.hpp"

namespace engage::pipeline {

// File names inside the working directory (--out-dir).
inline constexpr const char* kEventsFile = "events.csv";
inline constexpr const char* kGradesFile = "grades.csv";
inline constexpr const char* kCourseFile = "course.toml";
inline constexpr const char* kTruthFile = "ground_truth.csv";
inline constexpr const char* kMetricsFile = "metrics_raw.csv";
inline constexpr const char* kCleanGradesFile = "grades_clean.csv";
inline constexpr const char* kReconciliationFile = "reconciliation.csv";
inline constexpr const char* kLevelsFile = "levels.csv";
inline constexpr const char* kClustersFile = "clusters.json";
inline constexpr const char* kDatasetFile = "dataset.csv";
inline constexpr const char* kReportStem = "report";
inline constexpr const char* kSequencesFile = "sequences.csv";

struct SynthOptions {
  std::filesystem::path out_dir;
  std::size_t n_students = 200;
  std::uint64_t seed = 7;
  double implication_strength = 1.0;
};

struct EtlOptions {
  std::filesystem::path events;
  std::filesystem::path grades;
  std::filesystem::path course_config;
  std::filesystem::path out_dir;
  bool keep_partial = false;
};

struct ClusterOptions {
  std::filesystem::path out_dir;
  std::uint64_t seed = 7;
};

struct MineOptions {
  std::filesystem::path out_dir;
  MiningConfig config;
  ReportFormat format = ReportFormat::kText;
};

struct ReportOptions {
  std::filesystem::path out_dir;
  ReportFormat format = ReportFormat::kText;
};

struct SequencesOptions {
  std::filesystem::path events;
  std::filesystem::path out_dir;
  double min_support = 0.5;
  std::size_t max_len = 4;
  ReportFormat format = ReportFormat::kText;
};

// Each step reads its declared inputs, writes its outputs into out_dir and
// prints a human-readable summary (or the report) to `out`. Failures are
// thrown as engage::Error; a missing input is kMissingInput.
void run_synth(const SynthOptions& opts, std::ostream& out);
void run_etl(const EtlOptions& opts, std::ostream& out, std::ostream& warn);
void run_cluster(const ClusterOptions& opts, std::ostream& out);
RuleReport run_mine(const MineOptions& opts, std::ostream& out);
void run_report(const ReportOptions& opts, std::ostream& out);
void run_sequences(const SequencesOptions& opts, std::ostream& out);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace engage::pipeline
