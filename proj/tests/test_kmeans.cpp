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

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "engage/error.hpp"
#include "engage/kmeans.hpp"
#include "engage/random.hpp"

using namespace engage;

namespace {

FeatureMatrix matrix(std::size_t cols, std::vector<double> values) {
  FeatureMatrix m;
  m.cols = cols;
  m.values = std::move(values);
  for (std::size_t r = 0; r < m.rows(); ++r) m.row_ids.push_back("r" + std::to_string(r));
  return m;
}

// Three tight, well-separated 2-D blobs of `per` points each.
FeatureMatrix blobs(Rng& rng, std::size_t per) {
  const double centers[3][2] = {{0.0, 0.0}, {10.0, 10.0}, {20.0, 0.0}};
  std::vector<double> v;
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < per; ++i) {
      v.push_back(centers[b][0] + rng.uniform(-0.5, 0.5));
      v.push_back(centers[b][1] + rng.uniform(-0.5, 0.5));
    }
  }
  return matrix(2, std::move(v));
}

}  // namespace

TEST_CASE("normalize rescales columns to [0, 1]") {
  const auto n = normalize(matrix(2, {0, 7, 5, 7, 10, 7}));
  CHECK(n.at(0, 0) == 0.0);
  CHECK(n.at(1, 0) == 0.5);
  CHECK(n.at(2, 0) == 1.0);
  for (std::size_t r = 0; r < 3; ++r) CHECK(n.at(r, 1) == 0.0);
  REQUIRE(n.scaling.size() == 2);
  CHECK(n.scaling[0] == std::pair<double, double>{0.0, 10.0});
}

TEST_CASE("engagement matrix imputes missing durations with the column max") {
  EngagementMetrics a, b;
  a.num_logins = 3;
  a.assign_dur_h = {10.0, 20.0, 30.0};
  a.avg_assign_dur_h = 20.0;
  b.num_logins = 5;
  b.assign_dur_h[0] = 4.0;
  b.avg_assign_dur_h = 4.0;
  const auto m = engagement_matrix({{"a", a}, {"b", b}});
  CHECK(m.cols == kMetricCount);
  REQUIRE(m.rows() == 2);
  CHECK(m.row_ids == std::vector<std::string>{"a", "b"});
  CHECK(m.at(1, 0) == 5.0);
  CHECK(m.at(1, 6) == 20.0);
  CHECK(m.at(1, 7) == 30.0);
}

TEST_CASE("k-means recovers planted blobs exactly") {
  Rng rng(3);
  const auto m = blobs(rng, 40);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto res = kmeans(m, 3, seed);
    for (std::size_t b = 0; b < 3; ++b) {
      const auto label = res.assignments[b * 40];
      for (std::size_t i = 0; i < 40; ++i) CHECK(res.assignments[b * 40 + i] == label);
    }
    const std::set<std::size_t> distinct(res.assignments.begin(), res.assignments.end());
    CHECK(distinct.size() == 3);
  }
}

TEST_CASE("the blob partition does not depend on row order") {
  Rng rng(8);
  const auto m = blobs(rng, 30);
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size() - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }
  std::vector<double> pv;
  for (auto p : perm) pv.insert(pv.end(), m.row(p).begin(), m.row(p).end());
  const auto a = kmeans(m, 3, 1);
  const auto b = kmeans(matrix(2, pv), 3, 1);
  // Same co-membership for every pair of original rows.
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      CHECK((a.assignments[perm[i]] == a.assignments[perm[j]]) == (b.assignments[i] == b.assignments[j]));
    }
  }
}

TEST_CASE("k = 1 yields the mean") {
  const auto res = kmeans(matrix(1, {1, 2, 3, 6}), 1);
  REQUIRE(res.centroids.size() == 1);
  CHECK(res.centroids[0][0] == doctest::Approx(3.0));
  CHECK(res.inertia == doctest::Approx(4 + 1 + 0 + 9));
}

TEST_CASE("k-means rejects too few rows") {
  try {
    kmeans(matrix(1, {1, 2}), 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInsufficientData);
  }
}

TEST_CASE("levels follow the mean of the count dimensions") {
  std::vector<std::vector<double>> c = {
      {0.9, 0.9, 0.9, 0.9, 0.9, 0.1, 0.1, 0.1, 0.1},
      {0.1, 0.1, 0.1, 0.1, 0.1, 0.9, 0.9, 0.9, 0.9},
      {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
  };
  CHECK(cluster_levels(c) == std::vector<EngagementLevel>{EngagementLevel::kHigh, EngagementLevel::kLow,
                                                          EngagementLevel::kMedium});
  // Equal means fall back to logins.
  c[2] = {0.5, 0.25, 0.25, 0.0, 0.0, 0, 0, 0, 0};
  c[1] = {0.25, 0.25, 0.25, 0.25, 0.0, 0, 0, 0, 0};
  CHECK(cluster_levels(c) == std::vector<EngagementLevel>{EngagementLevel::kHigh, EngagementLevel::kLow,
                                                          EngagementLevel::kMedium});
  const std::vector<std::size_t> assign{2, 0, 1};
  CHECK(label_levels(c, assign) == std::vector<EngagementLevel>{EngagementLevel::kMedium, EngagementLevel::kHigh,
                                                                EngagementLevel::kLow});
  CHECK_THROWS_AS(cluster_levels({{1.0}, {2.0}}), Error);
}

TEST_CASE("k-means properties on random data") {
  Rng rng(17);
  for (int round = 0; round < 60; ++round) {
    const std::size_t cols = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(3, 40));
    std::vector<double> v(rows * cols);
    for (auto& x : v) x = std::floor(rng.uniform(0, 5));
    const auto m = matrix(cols, v);
    const std::uint64_t seed = rng.next();

    const auto res = kmeans(m, 3, seed);
    for (std::size_t i = 1; i < res.inertia_history.size(); ++i) {
      CHECK(res.inertia_history[i] <= res.inertia_history[i - 1] + 1e-9);
    }
    for (std::size_t r = 0; r < rows; ++r) CHECK(res.assignments[r] < 3);

    const auto again = kmeans(m, 3, seed);
    CHECK(again.assignments == res.assignments);
    CHECK(again.centroids == res.centroids);

  }
}
