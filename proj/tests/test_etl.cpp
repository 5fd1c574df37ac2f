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

#include <sstream>

#include "doctest.h"
#include "engage/error.hpp"
#include "engage/etl.hpp"
#include "engage/gsp.hpp"

using namespace engage;

namespace {

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an engage::Error");
  return ErrorKind::kParse;
}

std::vector<EventRecord> events_from(const std::string& text) {
  std::istringstream in(text);
  return parse_event_log(in);
}

std::vector<GradeRecord> grades_from(const std::string& text) {
  std::istringstream in(text);
  return parse_grades(in);
}

const std::string kEventHeader =
    "event_date,event_type,event_location,session_start,session_end,student_id\n";
const std::string kGradeHeader =
    "student_id,assignment1,assignment2,assignment3,quiz1,midterm,final_exam,course_grade\n";

CourseConfig course() {
  std::istringstream in(
      "[assignments]\n"
      "assignment1_posted = \"2024-01-01T00:00:00\"\n"
      "assignment2_posted = \"2024-02-01T00:00:00\"\n"
      "assignment3_posted = \"2024-03-01T00:00:00\"\n");
  return parse_course_config(in);
}

}  // namespace

TEST_CASE("event log parsing") {
  const auto events = events_from(kEventHeader +
                                  "2024-01-02T10:00:00,Login,web,2024-01-02T09:55:00,2024-01-02T11:00:00,s1\n"
                                  "\n"
                                  "2024-01-02T10:05:00,ForumRead,forum,,,s1\n");
  REQUIRE(events.size() == 2);
  CHECK(events[0].event_type == "Login");
  CHECK(events[0].session_start.has_value());
  CHECK_FALSE(events[1].session_end.has_value());
  CHECK(events[1].student_id == "s1");

  CHECK(events_from(kEventHeader).empty());
  CHECK(write_events_csv(events_from(write_events_csv(events))) == write_events_csv(events));
}

TEST_CASE("event log errors name the line") {
  try {
    events_from(kEventHeader + "2024-01-02T10:00:00,Login,web,,,s1\n2024-01-02T10:00:00,Login,web,s1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] { events_from(""); }) == ErrorKind::kParse);
  CHECK(kind_of([] { events_from(kEventHeader + "yesterday,Login,web,,,s1\n"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { events_from("event_date,event_type\n"); }) == ErrorKind::kParse);
}

TEST_CASE("grade parsing") {
  const auto g = grades_from(kGradeHeader + "s1,90,80,70,60,50,40,30.5\n");
  REQUIRE(g.size() == 1);
  CHECK(g[0].scores[kCourseGradeIndex] == 30.5);
  CHECK(grades_from(write_grades_csv(g))[0].scores == g[0].scores);

  CHECK(kind_of([] { grades_from(kGradeHeader + "s1,105,80,70,60,50,40,30\n"); }) == ErrorKind::kRange);
  CHECK(kind_of([] { grades_from(kGradeHeader + "s1,-5,80,70,60,50,40,30\n"); }) == ErrorKind::kRange);
  CHECK(kind_of([] { grades_from(kGradeHeader + "s1,x,80,70,60,50,40,30\n"); }) == ErrorKind::kParse);
  CHECK(kind_of([] {
          grades_from(kGradeHeader + "s1,1,2,3,4,5,6,7\ns1,1,2,3,4,5,6,7\n");
        }) == ErrorKind::kDuplicateKey);
}

TEST_CASE("course config") {
  const auto c = course();
  CHECK(format_timestamp(c.assignment_posted[1]) == "2024-02-01T00:00:00");
  std::istringstream round_trip(format_course_config(c));
  CHECK(parse_course_config(round_trip).assignment_posted == c.assignment_posted);
  std::istringstream partial("assignment1_posted = \"2024-01-01T00:00:00\"\n");
  CHECK(kind_of([&] { parse_course_config(partial); }) == ErrorKind::kParse);
}

TEST_CASE("engagement metrics") {
  const auto events = events_from(kEventHeader +
                                  "2024-01-01T08:00:00,Login,web,,,s1\n"
                                  "2024-01-01T09:00:00,Login,web,,,s1\n"
                                  "2024-01-02T09:00:00,Login,web,,,s1\n"
                                  "2024-01-02T09:10:00,QuizReview,quiz,,,s1\n"
                                  "2024-01-01T20:00:00,AssignmentSubmit1,lms,,,s1\n"
                                  "2024-01-02T03:00:00,AssignmentSubmit1,lms,,,s1\n"
                                  "2024-01-31T23:00:00,AssignmentSubmit2,lms,,,s1\n");
  const auto seqs = build_sequences(events);
  REQUIRE(seqs.size() == 1);
  const auto m = compute_engagement_metrics(seqs[0], course().assignment_posted);
  CHECK(m.num_logins == 3);
  CHECK(m.num_quiz_reviews == 1);
  CHECK(m.num_forum_posts == 0);
  // The last submission counts; the early one for assignment 2 clamps to 0.
  CHECK(m.assign_dur_h[0] == 27.0);
  CHECK(m.assign_dur_h[1] == 0.0);
  CHECK_FALSE(m.assign_dur_h[2].has_value());
  CHECK(m.avg_assign_dur_h == 13.5);

  MetricsTable table{{"s1", m}};
  std::istringstream in(write_metrics_csv(table));
  CHECK(parse_metrics_csv(in) == table);
}

TEST_CASE("discretize") {
  CHECK(discretize(27.0) == 30);
  CHECK(discretize(0.0) == 0);
  CHECK(discretize(25.0) == 30);
  CHECK(discretize(24.99) == 20);
  CHECK(discretize(100.0) == 100);
  CHECK(kind_of([] { discretize(-1.0); }) == ErrorKind::kDomain);
}

TEST_CASE("range warnings flag values above the soft maxima") {
  EngagementMetrics m;
  m.num_logins = 700;
  m.num_forum_posts = 3;
  const auto w = range_warnings({{"s9", m}});
  REQUIRE(w.size() == 1);
  CHECK(w[0].find("num_logins") != std::string::npos);
}

TEST_CASE("dataset assembly reconciles ids") {
  EngagementMetrics m;
  m.num_logins = 12;
  m.assign_dur_h[0] = 27.0;
  m.avg_assign_dur_h = 27.0;
  const MetricsTable metrics{{"a", m}, {"b", m}};
  const std::map<std::string, EngagementLevel> levels{{"a", EngagementLevel::kLow},
                                                      {"b", EngagementLevel::kHigh}};
  GradeRecord ga{"a", {91, 88, 70, 95, 64, 49, 84.9}};
  GradeRecord gc{"c", {1, 2, 3, 4, 5, 6, 7}};

  const auto strict = assemble_dataset(metrics, levels, {ga, gc});
  REQUIRE(strict.vectors.size() == 1);
  REQUIRE(strict.reconciliation.size() == 2);
  CHECK(strict.reconciliation[0].student_id == "b");
  CHECK(strict.reconciliation[1].student_id == "c");

  const auto& v = strict.vectors[0];
  CHECK(v.fields().size() == StudentFeatureVector::kFieldCount);
  CHECK(StudentFeatureVector::kFieldCount == 18);
  CHECK(dataset_columns().size() == 18);
  CHECK(v.metrics[0] == 10);
  CHECK(v.metrics[5] == 30);
  CHECK_FALSE(v.metrics[6].has_value());
  CHECK(v.grades[kCourseGradeIndex] == 80);
  CHECK(v.fields()[10] == "L");

  const auto loose = assemble_dataset(metrics, levels, {ga, gc}, true);
  CHECK(loose.vectors.size() == 3);
  CHECK(write_dataset_csv(loose.vectors) == write_dataset_csv(assemble_dataset(metrics, levels, {ga, gc}, true).vectors));
  CHECK(write_reconciliation_csv(strict.reconciliation).rfind("student_id,reason\n", 0) == 0);

  CHECK(kind_of([&] { assemble_dataset(metrics, {}, {ga}); }) == ErrorKind::kMissingInput);
}

TEST_CASE("item encoding") {
  CHECK(grade_band(40) == "<50");
  CHECK(grade_band(50) == "50-69");
  CHECK(grade_band(80) == "70-89");
  CHECK(grade_band(90) == ">=90");
  CHECK(is_grade_attribute("Quiz1"));
  CHECK_FALSE(is_grade_attribute("NumLogins"));
  CHECK(is_engagement_attribute("EngagementLevel"));
  CHECK(is_engagement_attribute("AvgAssignDuration"));

  StudentFeatureVector v;
  v.student_id = "a";
  v.metrics[0] = 20;
  v.level = EngagementLevel::kHigh;
  v.grades[kQuiz1Index] = 90;
  v.grades[kCourseGradeIndex] = 60;

  const auto banded = encode_dataset({v}, GradeBucketing::kBanded);
  REQUIRE(banded.size() == 1);
  CHECK(banded.transactions()[0].size() == 4);
  const auto& u = banded.universe();
  CHECK(banded.transactions()[0].contains(u.id({"Quiz1", ">=90"})));
  CHECK(banded.transactions()[0].contains(u.id({"CourseGrade", "50-69"})));
  CHECK(banded.transactions()[0].contains(u.id({"EngagementLevel", "H"})));
  CHECK(u.label(u.id({"Quiz1", ">=90"})) == "Quiz1>=90");
  CHECK(banded.record_ids() == std::vector<std::string>{"a"});

  const auto exact = encode_dataset({v}, GradeBucketing::kExact10s);
  CHECK(exact.transactions()[0].contains(exact.universe().id({"Quiz1", "90"})));
}
