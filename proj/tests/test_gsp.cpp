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

#include <set>

#include "doctest.h"
#include "engage/error.hpp"
#include "engage/gsp.hpp"
#include "engage/oracle.hpp"
#include "test_support.hpp"

using namespace engage;

namespace {

EventRecord event(const std::string& student, const std::string& at, const std::string& type) {
  EventRecord e;
  e.student_id = student;
  e.event_date = parse_timestamp(at);
  e.event_type = type;
  e.event_location = "lms";
  return e;
}

using Seqs = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("build_sequences orders events by time per student") {
  const std::vector<EventRecord> events = {
      event("s2", "2024-01-02T10:00:00", "Login"),
      event("s1", "2024-01-03T10:00:00", "ForumRead"),
      event("s1", "2024-01-01T10:00:00", "Login"),
      event("s2", "2024-01-01T09:00:00", "ContentRead"),
  };
  const auto seqs = build_sequences(events);
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].student_id == "s1");
  CHECK(seqs[0].tokens() == std::vector<std::string>{"Login", "ForumRead"});
  CHECK(seqs[1].tokens() == std::vector<std::string>{"ContentRead", "Login"});
}

TEST_CASE("contains_subsequence allows gaps") {
  CHECK(contains_subsequence({"a", "x", "b"}, {"a", "b"}));
  CHECK_FALSE(contains_subsequence({"b", "a"}, {"a", "b"}));
  CHECK(contains_subsequence({"a"}, {}));
}

TEST_CASE("gsp example") {
  const Seqs db = {{"a", "b"}, {"a", "b"}, {"b", "a"}};
  const auto out = gsp_mine(db, 2.0 / 3.0);
  REQUIRE(out.size() == 3);
  CHECK(out[0].elements == std::vector<std::string>{"a"});
  CHECK(out[0].support == 1.0);
  CHECK(out[1].elements == std::vector<std::string>{"b"});
  CHECK(out[1].support == 1.0);
  CHECK(out[2].elements == std::vector<std::string>{"a", "b"});
  CHECK(out[2].count == 2);
  CHECK(out[2].support == doctest::Approx(2.0 / 3.0));
  CHECK(pattern_label(out[2]) == "<a, b>");
}

TEST_CASE("gsp handles repeated tokens and limits") {
  const Seqs db = {{"a", "a"}, {"a"}};
  const auto out = gsp_mine(db, 0.5);
  REQUIRE(out.size() == 2);
  CHECK(out[1].elements == std::vector<std::string>{"a", "a"});
  CHECK(out[1].count == 1);
  CHECK(gsp_mine(db, 0.5, 1).size() == 1);
  CHECK(gsp_mine(Seqs{}, 0.5).empty());
  CHECK_THROWS_AS(gsp_mine(db, 0.0), Error);
  CHECK_THROWS_AS(gsp_mine(db, 0.5, 0), Error);
}

TEST_CASE("gsp matches the brute-force oracle") {
  Rng rng(41);
  for (int round = 0; round < 150; ++round) {
    const auto db = engage::testing::random_sequences(rng);
    const double min_support = 0.1 + 0.9 * rng.uniform01();
    const std::size_t max_len = static_cast<std::size_t>(rng.uniform_int(1, 4));
    CHECK(gsp_mine(db, min_support, max_len) == oracle::brute_force_sequences(db, min_support, max_len));
  }
}

TEST_CASE("frequent sequences are closed under element deletion") {
  Rng rng(43);
  for (int round = 0; round < 100; ++round) {
    const auto db = engage::testing::random_sequences(rng, 5, 30, 8);
    const double min_support = 0.2 + 0.6 * rng.uniform01();
    const auto out = gsp_mine(db, min_support, 4);
    std::set<std::vector<std::string>> found;
    for (const auto& p : out) found.insert(p.elements);
    for (const auto& p : out) {
      std::uint64_t direct = 0;
      for (const auto& s : db) direct += contains_subsequence(s, p.elements) ? 1 : 0;
      CHECK(direct == p.count);
      if (p.elements.size() < 2) continue;
      for (std::size_t drop = 0; drop < p.elements.size(); ++drop) {
        auto sub = p.elements;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(found.contains(sub));
      }
    }
  }
}
