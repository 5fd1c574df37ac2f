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

#include "engage/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "engage/error.hpp"
#include "engage/random.hpp"

namespace engage {

namespace {

using std::chrono::hours;
using std::chrono::minutes;
using std::chrono::seconds;

GradeModel gm(double mean, double sigma) { return {mean, sigma}; }

double draw_grade(Rng& rng, const GradeModel& model) {
  double g = model.mean;
  if (model.sigma > 0.0) {
    g = rng.normal(model.mean, model.sigma);
    for (int tries = 0; std::abs(g - model.mean) > 2.0 * model.sigma && tries < 100; ++tries) {
      g = rng.normal(model.mean, model.sigma);
    }
    g = std::clamp(g, model.mean - 2.0 * model.sigma, model.mean + 2.0 * model.sigma);
  }
  g = std::clamp(g, 0.0, 100.0);
  return std::round(g * 10.0) / 10.0;
}

std::string student_name(std::size_t i, std::size_t n) {
  const int width = std::max(4, static_cast<int>(std::to_string(n).size()));
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%0*zu", width, i + 1);
  return buf;
}

struct Session {
  Timestamp start;
  Timestamp end;
};

}  // namespace

CohortSpec CohortSpec::defaults(std::size_t n_students, std::uint64_t seed) {
  CohortSpec s;
  s.n_students = n_students;
  s.seed = seed;
  s.course_start = std::chrono::sys_days{std::chrono::year{2024} / 1 / 8} + hours{9};
  s.course.assignment_posted = {s.course_start + hours{24 * 14}, s.course_start + hours{24 * 42},
                                s.course_start + hours{24 * 70}};

  auto& low = s.levels[0];
  low.count_ranges = {{{5, 40}, {10, 80}, {0, 5}, {0, 1}, {0, 1}}};
  low.duration_ranges_h = {{{150, 290}, {150, 290}, {150, 290}}};
  low.missing_submission_rate = 0.1;
  low.grades = {gm(58, 8), gm(56, 8), gm(57, 8), gm(60, 8), gm(58, 8), gm(55, 8), gm(60, 7)};

  auto& mid = s.levels[1];
  mid.count_ranges = {{{60, 120}, {120, 250}, {10, 25}, {1, 4}, {2, 4}}};
  mid.duration_ranges_h = {{{60, 140}, {60, 140}, {60, 140}}};
  mid.grades = {gm(76, 5), gm(75, 5), gm(77, 5), gm(77, 5), gm(75, 5), gm(74, 5), gm(77, 4.5)};

  auto& high = s.levels[2];
  high.count_ranges = {{{160, 300}, {320, 600}, {30, 55}, {5, 10}, {5, 10}}};
  high.duration_ranges_h = {{{5, 50}, {5, 50}, {5, 50}}};
  high.grades = {gm(92, 3), gm(91, 3), gm(92, 3), gm(94, 2.5), gm(91, 3), gm(92, 3), gm(94, 2)};
  return s;
}

void CohortSpec::validate() const {
  const double mix = level_mix[0] + level_mix[1] + level_mix[2];
  if (std::abs(mix - 1.0) > 1e-9) throw Error(ErrorKind::kInvalidSpec, "level_mix must sum to 1");
  for (double f : level_mix) {
    if (f < 0.0) throw Error(ErrorKind::kInvalidSpec, "level_mix entries must be nonnegative");
  }
  if (!(implication_strength >= 0.0 && implication_strength <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec, "implication_strength must lie in [0, 1]");
  }
  if (course_days == 0) throw Error(ErrorKind::kInvalidSpec, "course_days must be positive");
  for (const auto& lvl : levels) {
    for (const auto& [lo, hi] : lvl.count_ranges) {
      if (lo > hi) throw Error(ErrorKind::kInvalidSpec, "count range is not ordered");
    }
    for (const auto& [lo, hi] : lvl.duration_ranges_h) {
      if (!(lo >= 0.0 && lo <= hi)) throw Error(ErrorKind::kInvalidSpec, "duration range is invalid");
    }
    if (!(lvl.missing_submission_rate >= 0.0 && lvl.missing_submission_rate <= 1.0)) {
      throw Error(ErrorKind::kInvalidSpec, "missing_submission_rate must lie in [0, 1]");
    }
    for (const auto& g : lvl.grades) {
      if (g.sigma < 0.0) throw Error(ErrorKind::kInvalidSpec, "grade sigma must be nonnegative");
    }
  }
}

Cohort generate_cohort(const CohortSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const auto course_seconds = static_cast<std::uint64_t>(spec.course_days) * 24 * 3600;

  std::vector<EventRecord> events;
  std::vector<GradeRecord> grades;
  Cohort cohort;

  for (std::size_t i = 0; i < spec.n_students; ++i) {
    const std::string id = student_name(i, spec.n_students);
    const std::size_t level = rng.pick(spec.level_mix);
    const LevelProfile& profile = spec.levels[level];
    cohort.truth.emplace_back(id, kLevels[level]);

    std::array<std::uint64_t, kCountMetricCount> counts{};
    for (std::size_t c = 0; c < kCountMetricCount; ++c) {
      counts[c] = rng.uniform_int(profile.count_ranges[c].first, profile.count_ranges[c].second);
    }
    // Every student appears in the log at least once.
    counts[0] = std::max<std::uint64_t>(1, counts[0]);

    std::vector<Session> sessions;
    for (std::uint64_t l = 0; l < counts[0]; ++l) {
      const Timestamp start = spec.course_start + seconds{rng.uniform_int(0, course_seconds)};
      const Timestamp end = start + minutes{rng.uniform_int(20, 120)};
      sessions.push_back({start, end});
      events.push_back({start, std::string(event_type::kLogin), "/course", start, end, id});
    }
    const std::array<std::pair<std::string_view, std::string>, 4> other = {{
        {event_type::kContentRead, "/course/content"},
        {event_type::kForumRead, "/course/forum"},
        {event_type::kForumPost, "/course/forum"},
        {event_type::kQuizReview, "/course/quiz1"},
    }};
    for (std::size_t c = 1; c < kCountMetricCount; ++c) {
      for (std::uint64_t e = 0; e < counts[c]; ++e) {
        const Session& s = sessions[rng.uniform_int(0, sessions.size() - 1)];
        const auto length = static_cast<std::uint64_t>((s.end - s.start).count());
        const Timestamp at = s.start + seconds{rng.uniform_int(0, length)};
        events.push_back({at, std::string(other[c - 1].first), other[c - 1].second, s.start, s.end, id});
      }
    }
    for (std::size_t a = 0; a < 3; ++a) {
      if (rng.bernoulli(profile.missing_submission_rate)) continue;
      const auto [lo, hi] = profile.duration_ranges_h[a];
      const auto delay = static_cast<std::int64_t>(std::llround(rng.uniform(lo, hi) * 3600.0));
      const Timestamp at = spec.course.assignment_posted[a] + seconds{delay};
      events.push_back({at, std::string(event_type::kAssignmentSubmit[a]),
                        "/course/assignments/" + std::to_string(a + 1), at - minutes{10},
                        at + minutes{5}, id});
    }

    GradeRecord g;
    g.student_id = id;
    const bool coupled = rng.bernoulli(spec.implication_strength);
    for (std::size_t k = 0; k < kGradeCount; ++k) {
      const std::size_t source = coupled ? level : rng.pick(spec.level_mix);
      g.scores[k] = draw_grade(rng, spec.levels[source].grades[k]);
    }
    grades.push_back(std::move(g));
  }

  std::stable_sort(events.begin(), events.end(), [](const EventRecord& a, const EventRecord& b) {
    if (a.event_date != b.event_date) return a.event_date < b.event_date;
    return a.student_id < b.student_id;
  });

  cohort.events_csv = write_events_csv(events);
  cohort.grades_csv = write_grades_csv(grades);
  cohort.course_config = format_course_config(spec.course);
  cohort.ground_truth_csv = "student_id,true_level\n";
  for (const auto& [id, lvl] : cohort.truth) {
    cohort.ground_truth_csv += id + ',' + to_char(lvl) + '\n';
  }
  return cohort;
}

}  // namespace engage
