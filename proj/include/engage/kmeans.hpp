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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "engage/etl.hpp"
#include "engage/records.hpp"

namespace engage {

// Row-major real matrix with one row per student.
struct FeatureMatrix {
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::string> row_ids;
  // Per-column (min, max) recorded by normalize(); empty before scaling.
  std::vector<std::pair<double, double>> scaling;

  std::size_t rows() const { return cols == 0 ? 0 : values.size() / cols; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values).subspan(r * cols, cols);
  }
};

// Nine-column matrix of raw engagement metrics. A missing assignment duration
// is imputed with the largest observed value of its column (0 if none).
FeatureMatrix engagement_matrix(const MetricsTable& metrics);

// Min-max scaling of each column to [0, 1]; constant columns become 0.
FeatureMatrix normalize(const FeatureMatrix& m);

struct KMeansResult {
  std::vector<std::size_t> assignments;
  std::vector<std::vector<double>> centroids;
  double inertia = 0.0;
  // Sum of squared distances after every assignment and every update step.
  std::vector<double> inertia_history;
  std::size_t iterations = 0;
};

// Lloyd iteration with seeded farthest-point initialization: the first
// centroid is a row drawn from the seed, each next one the row farthest from
// all chosen centroids. Stops when no centroid moves more than tol or after
// max_iter rounds. An empty cluster takes the point farthest from its own
// centroid. Throws kInsufficientData when rows < k.
KMeansResult kmeans(const FeatureMatrix& m, std::size_t k = 3, std::uint64_t seed = 0,
                    std::size_t max_iter = 300, double tol = 1e-6);

// Ranks k = 3 clusters by the mean of their first five (count) coordinates,
// ties by the first coordinate (logins), and maps them to L, M, H. Returns
// one level per assignment. Throws kLevelMapping unless there are 3 centroids.
std::vector<EngagementLevel> label_levels(const std::vector<std::vector<double>>& centroids,
                                          std::span<const std::size_t> assignments);

// Level of each cluster index under the same ranking.
std::vector<EngagementLevel> cluster_levels(const std::vector<std::vector<double>>& centroids);

}  // namespace engage
