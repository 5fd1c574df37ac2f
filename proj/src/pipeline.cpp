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

#include "engage/pipeline.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "engage/csv.hpp"
#include "engage/error.hpp"
#include "engage/etl.hpp"
#include "engage/gsp.hpp"
#include "engage/kmeans.hpp"
#include "engage/synth.hpp"
#include "json.hpp"

namespace engage::pipeline {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMissingInput, "missing input: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kMissingInput, "cannot write " + path.string());
  out << bytes;
}

namespace {

std::istringstream open_input(const fs::path& path, const char* produced_by) {
  if (!fs::exists(path)) {
    std::string msg = "missing input: " + path.string();
    if (produced_by) msg += std::string(" (run `") + produced_by + "` first)";
    throw Error(ErrorKind::kMissingInput, msg);
  }
  return std::istringstream(read_file(path));
}

std::map<std::string, EngagementLevel> parse_levels_csv(std::istream& in) {
  csv::Reader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields != std::vector<std::string>{"student_id", "engagement_level"}) {
    throw Error(ErrorKind::kParse, "levels file must start with student_id,engagement_level");
  }
  std::map<std::string, EngagementLevel> out;
  while (reader.next(fields)) {
    const auto line = std::to_string(reader.line_number());
    if (fields.size() != 2) throw Error(ErrorKind::kParse, "line " + line + ": expected 2 fields");
    const auto lvl = parse_level(fields[1]);
    if (!lvl) throw Error(ErrorKind::kParse, "line " + line + ": bad level '" + fields[1] + "'");
    if (!out.emplace(fields[0], *lvl).second) {
      throw Error(ErrorKind::kDuplicateKey, "line " + line + ": duplicate student_id '" + fields[0] + "'");
    }
  }
  return out;
}

}  // namespace

void run_synth(const SynthOptions& opts, std::ostream& out) {
  auto spec = CohortSpec::defaults(opts.n_students, opts.seed);
  spec.implication_strength = opts.implication_strength;
  const auto cohort = generate_cohort(spec);
  write_file(opts.out_dir / kEventsFile, cohort.events_csv);
  write_file(opts.out_dir / kGradesFile, cohort.grades_csv);
  write_file(opts.out_dir / kCourseFile, cohort.course_config);
  write_file(opts.out_dir / kTruthFile, cohort.ground_truth_csv);
  out << "synth: " << opts.n_students << " students (seed " << opts.seed << ", implication strength "
      << format_number(opts.implication_strength) << ") -> " << opts.out_dir.string() << '\n';
}

void run_etl(const EtlOptions& opts, std::ostream& out, std::ostream& warn) {
  auto events_in = open_input(opts.events, nullptr);
  auto grades_in = open_input(opts.grades, nullptr);
  auto course_in = open_input(opts.course_config, nullptr);

  const auto events = parse_event_log(events_in);
  const auto grades = parse_grades(grades_in);
  const auto course = parse_course_config(course_in);

  auto metrics = compute_all_metrics(build_sequences(events), course);
  for (const auto& w : range_warnings(metrics)) warn << "warning: " << w << '\n';

  std::map<std::string, const GradeRecord*> graded;
  for (const auto& g : grades) graded.emplace(g.student_id, &g);
  std::vector<ReconciliationEntry> reconciliation;
  std::vector<GradeRecord> kept_grades;
  for (const auto& g : grades) {
    if (metrics.contains(g.student_id) || opts.keep_partial) kept_grades.push_back(g);
    if (!metrics.contains(g.student_id)) reconciliation.push_back({g.student_id, "no events in the event log"});
  }
  for (auto it = metrics.begin(); it != metrics.end();) {
    if (graded.contains(it->first)) {
      ++it;
      continue;
    }
    reconciliation.push_back({it->first, "no grade record"});
    it = opts.keep_partial ? std::next(it) : metrics.erase(it);
  }
  std::sort(reconciliation.begin(), reconciliation.end(),
            [](const auto& a, const auto& b) { return a.student_id < b.student_id; });

  write_file(opts.out_dir / kMetricsFile, write_metrics_csv(metrics));
  write_file(opts.out_dir / kCleanGradesFile, write_grades_csv(kept_grades));
  write_file(opts.out_dir / kReconciliationFile, write_reconciliation_csv(reconciliation));
  out << "etl: " << events.size() << " events, " << metrics.size() << " students with metrics, "
      << kept_grades.size() << " graded, " << reconciliation.size() << " reconciliation entries\n";
}

void run_cluster(const ClusterOptions& opts, std::ostream& out) {
  auto metrics_in = open_input(opts.out_dir / kMetricsFile, "etl");
  const auto metrics = parse_metrics_csv(metrics_in);
  const auto scaled = normalize(engagement_matrix(metrics));
  const auto result = kmeans(scaled, 3, opts.seed);
  const auto per_cluster = cluster_levels(result.centroids);
  const auto labels = label_levels(result.centroids, result.assignments);

  std::string levels_csv = "student_id,engagement_level\n";
  std::array<std::size_t, 3> counts{};
  for (std::size_t r = 0; r < scaled.rows(); ++r) {
    levels_csv += csv::escape(scaled.row_ids[r]) + ',' + to_char(labels[r]) + '\n';
    ++counts[result.assignments[r]];
  }
  write_file(opts.out_dir / kLevelsFile, levels_csv);

  nlohmann::ordered_json j;
  j["seed"] = opts.seed;
  j["k"] = 3;
  j["features"] = std::vector<std::string>(kMetricColumns.begin(), kMetricColumns.end());
  nlohmann::ordered_json scaling = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : scaled.scaling) scaling.push_back({{"min", lo}, {"max", hi}});
  j["scaling"] = scaling;
  nlohmann::ordered_json clusters = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < 3; ++c) {
    clusters.push_back({{"level", std::string(1, to_char(per_cluster[c]))},
                        {"size", counts[c]},
                        {"centroid", result.centroids[c]}});
  }
  j["clusters"] = clusters;
  j["inertia"] = result.inertia;
  j["iterations"] = result.iterations;
  j["inertia_history"] = result.inertia_history;
  write_file(opts.out_dir / kClustersFile, j.dump(2) + '\n');

  out << "cluster: " << scaled.rows() << " students -> ";
  for (std::size_t c = 0; c < 3; ++c) {
    out << (c ? ", " : "") << to_char(per_cluster[c]) << '=' << counts[c];
  }
  out << " (inertia " << format_number(result.inertia) << ")\n";
}

RuleReport run_mine(const MineOptions& opts, std::ostream& out) {
  opts.config.validate();
  auto metrics_in = open_input(opts.out_dir / kMetricsFile, "etl");
  auto grades_in = open_input(opts.out_dir / kCleanGradesFile, "etl");
  auto levels_in = open_input(opts.out_dir / kLevelsFile, "cluster");
  const auto metrics = parse_metrics_csv(metrics_in);
  const auto grades = parse_grades(grades_in);
  const auto levels = parse_levels_csv(levels_in);

  // etl already dropped unmatched students unless they were meant to be kept.
  const auto dataset = assemble_dataset(metrics, levels, grades, /*keep_partial=*/true);
  const std::string dataset_csv = write_dataset_csv(dataset.vectors);
  write_file(opts.out_dir / kDatasetFile, dataset_csv);
  if (dataset.vectors.empty()) throw Error(ErrorKind::kEmptyDatabase, "no students to mine");

  const auto db = encode_dataset(dataset.vectors, opts.config.grade_bucketing);
  RuleReport report;
  report.config = opts.config;
  report.universe = db.universe_ptr();
  report.rules = mine_rules(db, opts.config);
  report.levels = summarize_levels(levels, grades);
  report.record_count = dataset.vectors.size();
  report.dataset_hash = fnv1a64_hex(dataset_csv);

  const fs::path stem = opts.out_dir / kReportStem;
  write_file(fs::path(stem).replace_extension(".json"), emit_report(report, ReportFormat::kJson));
  write_file(fs::path(stem).replace_extension(".csv"), emit_report(report, ReportFormat::kCsv));
  write_file(fs::path(stem).replace_extension(".txt"), emit_report(report, ReportFormat::kText));
  out << emit_report(report, opts.format);
  return report;
}

void run_report(const ReportOptions& opts, std::ostream& out) {
  const fs::path path = opts.out_dir / (std::string(kReportStem) + ".json");
  if (!fs::exists(path)) throw Error(ErrorKind::kMissingInput, "missing input: " + path.string() + " (run `mine` first)");
  out << emit_report(parse_report_json(read_file(path)), opts.format);
}

void run_sequences(const SequencesOptions& opts, std::ostream& out) {
  auto events_in = open_input(opts.events, nullptr);
  const auto sequences = build_sequences(parse_event_log(events_in));
  const auto patterns = gsp_mine(sequences, opts.min_support, opts.max_len);

  std::string csv_out = "pattern,length,count,support\n";
  for (const auto& p : patterns) {
    std::string joined;
    for (std::size_t i = 0; i < p.elements.size(); ++i) joined += (i ? " " : "") + p.elements[i];
    csv_out += csv::join({joined, std::to_string(p.elements.size()), std::to_string(p.count),
                          format_number(p.support)}) +
               '\n';
  }
  write_file(opts.out_dir / kSequencesFile, csv_out);

  if (opts.format == ReportFormat::kCsv) {
    out << csv_out;
    return;
  }
  if (opts.format == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["extension"] = "sequential patterns over the raw event log";
    j["min_support"] = opts.min_support;
    j["max_len"] = opts.max_len;
    j["sequences"] = sequences.size();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : patterns) {
      arr.push_back({{"elements", p.elements}, {"count", p.count}, {"support", p.support}});
    }
    j["patterns"] = arr;
    out << j.dump(2) << '\n';
    return;
  }
  out << "Sequential patterns (extension: GSP over the raw event log)\n"
      << "min_support=" << format_number(opts.min_support) << " max_len=" << opts.max_len
      << " sequences=" << sequences.size() << "\n\n";
  for (const auto& p : patterns) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", p.support);
    out << pattern_label(p) << "  supp=" << buf << '\n';
  }
  out << '\n' << patterns.size() << " patterns\n";
}

}  // namespace engage::pipeline
