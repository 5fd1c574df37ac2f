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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "engage/timestamp.hpp"

namespace engage {

// Event-type vocabulary of the LMS log.
namespace event_type {
inline constexpr std::string_view kLogin = "Login";
inline constexpr std::string_view kContentRead = "ContentRead";
inline constexpr std::string_view kForumRead = "ForumRead";
inline constexpr std::string_view kForumPost = "ForumPost";
inline constexpr std::string_view kQuizReview = "QuizReview";
inline constexpr std::array<std::string_view, 3> kAssignmentSubmit = {
    "AssignmentSubmit1", "AssignmentSubmit2", "AssignmentSubmit3"};
}  // namespace event_type

struct EventRecord {
  Timestamp event_date;
  std::string event_type;
  std::string event_location;
  std::optional<Timestamp> session_start;
  std::optional<Timestamp> session_end;
  std::string student_id;
};

inline constexpr std::size_t kGradeCount = 7;
inline constexpr std::array<std::string_view, kGradeCount> kGradeColumns = {
    "assignment1", "assignment2", "assignment3", "quiz1", "midterm", "final_exam", "course_grade"};
inline constexpr std::size_t kCourseGradeIndex = 6;
inline constexpr std::size_t kQuiz1Index = 3;

struct GradeRecord {
  std::string student_id;
  std::array<double, kGradeCount> scores{};
};

struct TimedEvent {
  Timestamp at;
  std::string type;
};

// One student's events in timestamp order (input order on ties).
struct EventSequence {
  std::string student_id;
  std::vector<TimedEvent> events;

  std::vector<std::string> tokens() const;
};

enum class EngagementLevel : char { kLow = 'L', kMedium = 'M', kHigh = 'H' };

inline constexpr std::array<EngagementLevel, 3> kLevels = {
    EngagementLevel::kLow, EngagementLevel::kMedium, EngagementLevel::kHigh};

inline char to_char(EngagementLevel l) { return static_cast<char>(l); }
std::optional<EngagementLevel> parse_level(std::string_view s);

}  // namespace engage
