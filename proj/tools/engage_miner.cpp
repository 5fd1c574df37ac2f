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

// engage_miner: synthetic cohorts, ETL, clustering and association-rule
// mining over LMS engagement data.
//
// Exit status: 0 success, 1 data error, 2 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "engage/error.hpp"
#include "engage/pipeline.hpp"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(engage::ErrorKind kind) {
  return kind == engage::ErrorKind::kInvalidThreshold || kind == engage::ErrorKind::kInvalidSpec;
}

}  // namespace

int main(int argc, char** argv) {
  namespace pl = engage::pipeline;

  CLI::App app{"Engagement analytics and association-rule mining"};
  app.require_subcommand(1);

  pl::SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic cohort with planted structure");
  synth_cmd->add_option("--out-dir", synth.out_dir, "Output directory")->required();
  synth_cmd->add_option("--n", synth.n_students, "Number of students");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--implication-strength", synth.implication_strength,
                        "Probability that grades follow the student's engagement level")
      ->check(CLI::Range(0.0, 1.0));

  pl::EtlOptions etl;
  auto* etl_cmd = app.add_subcommand("etl", "Parse logs and grades, compute engagement metrics");
  etl_cmd->add_option("--out-dir", etl.out_dir, "Working directory")->required();
  etl_cmd->add_option("--events", etl.events, "events.csv (default: <out-dir>/events.csv)");
  etl_cmd->add_option("--grades", etl.grades, "grades.csv (default: <out-dir>/grades.csv)");
  etl_cmd->add_option("--course-config", etl.course_config,
                      "Assignment posting times (default: <out-dir>/course.toml)");
  etl_cmd->add_flag("--keep-partial", etl.keep_partial,
                    "Keep students missing from either the log or the grades");

  pl::ClusterOptions cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "Assign L/M/H engagement levels with k-means");
  cluster_cmd->add_option("--out-dir", cluster.out_dir, "Working directory")->required();
  cluster_cmd->add_option("--seed", cluster.seed, "Initialization seed");

  pl::MineOptions mine;
  std::string algorithm = "apriori";
  std::string bucketing = "banded";
  std::string mine_format = "text";
  auto* mine_cmd = app.add_subcommand("mine", "Mine association rules from the merged dataset");
  mine_cmd->add_option("--out-dir", mine.out_dir, "Working directory")->required();
  mine_cmd->add_option("--min-support", mine.config.min_support, "Minimum rule support");
  mine_cmd->add_option("--min-confidence", mine.config.min_confidence, "Minimum rule confidence");
  mine_cmd->add_option("--min-lift", mine.config.min_lift, "Rules must have lift above this");
  mine_cmd->add_option("--algorithm", algorithm, "apriori or fpgrowth")
      ->check(CLI::IsMember({"apriori", "fpgrowth"}));
  mine_cmd->add_option("--grade-bucketing", bucketing, "banded or exact-10s")
      ->check(CLI::IsMember({"banded", "exact-10s"}));
  mine_cmd->add_option("--max-rule-len", mine.config.max_rule_len, "Largest itemset size (0: no cap)");
  mine_cmd->add_option("--format", mine_format, "Output format for stdout")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  pl::ReportOptions report;
  std::string report_format = "text";
  auto* report_cmd = app.add_subcommand("report", "Render the last mined report");
  report_cmd->add_option("--out-dir", report.out_dir, "Working directory")->required();
  report_cmd->add_option("--format", report_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  pl::SequencesOptions seq;
  std::string seq_format = "text";
  auto* seq_cmd = app.add_subcommand("sequences", "Mine sequential patterns from the event log");
  seq_cmd->add_option("--out-dir", seq.out_dir, "Working directory")->required();
  seq_cmd->add_option("--events", seq.events, "events.csv (default: <out-dir>/events.csv)");
  seq_cmd->add_option("--min-support", seq.min_support, "Minimum pattern support");
  seq_cmd->add_option("--max-rule-len", seq.max_len, "Longest pattern");
  seq_cmd->add_option("--format", seq_format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*synth_cmd) {
      pl::run_synth(synth, std::cout);
    } else if (*etl_cmd) {
      if (etl.events.empty()) etl.events = etl.out_dir / pl::kEventsFile;
      if (etl.grades.empty()) etl.grades = etl.out_dir / pl::kGradesFile;
      if (etl.course_config.empty()) etl.course_config = etl.out_dir / pl::kCourseFile;
      pl::run_etl(etl, std::cout, std::cerr);
    } else if (*cluster_cmd) {
      pl::run_cluster(cluster, std::cout);
    } else if (*mine_cmd) {
      mine.config.algorithm = engage::parse_algorithm(algorithm);
      mine.config.grade_bucketing = engage::parse_grade_bucketing(bucketing);
      mine.format = engage::parse_report_format(mine_format);
      pl::run_mine(mine, std::cout);
    } else if (*report_cmd) {
      report.format = engage::parse_report_format(report_format);
      pl::run_report(report, std::cout);
    } else if (*seq_cmd) {
      if (seq.events.empty()) seq.events = seq.out_dir / pl::kEventsFile;
      seq.format = engage::parse_report_format(seq_format);
      pl::run_sequences(seq, std::cout);
    }
  } catch (const engage::Error& e) {
    std::cerr << "error (" << engage::to_string(e.kind()) << "): " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
