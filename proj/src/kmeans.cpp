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

#include "engage/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numeric>

#include "engage/error.hpp"
#include "engage/random.hpp"

namespace engage {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i] - b[i];
    d += x * x;
  }
  return d;
}

std::size_t nearest(std::span<const double> point, const std::vector<std::vector<double>>& centroids) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = squared_distance(point, centroids[c]);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

double inertia_of(const FeatureMatrix& m, const std::vector<std::size_t>& assignments,
                  const std::vector<std::vector<double>>& centroids) {
  double total = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) total += squared_distance(m.row(r), centroids[assignments[r]]);
  return total;
}

}  // namespace

FeatureMatrix engagement_matrix(const MetricsTable& metrics) {
  FeatureMatrix m;
  m.cols = kMetricCount;
  std::array<double, kMetricCount> fill{};
  for (const auto& [id, em] : metrics) {
    const auto v = em.values();
    for (std::size_t c = 0; c < kMetricCount; ++c) {
      if (v[c]) fill[c] = std::max(fill[c], *v[c]);
    }
  }
  for (const auto& [id, em] : metrics) {
    const auto v = em.values();
    for (std::size_t c = 0; c < kMetricCount; ++c) m.values.push_back(v[c].value_or(fill[c]));
    m.row_ids.push_back(id);
  }
  return m;
}

FeatureMatrix normalize(const FeatureMatrix& m) {
  FeatureMatrix out = m;
  out.scaling.assign(m.cols, {0.0, 0.0});
  if (m.rows() == 0) return out;
  for (std::size_t c = 0; c < m.cols; ++c) {
    double lo = m.at(0, c);
    double hi = lo;
    for (std::size_t r = 1; r < m.rows(); ++r) {
      lo = std::min(lo, m.at(r, c));
      hi = std::max(hi, m.at(r, c));
    }
    out.scaling[c] = {lo, hi};
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.values[r * m.cols + c] = hi > lo ? (m.at(r, c) - lo) / (hi - lo) : 0.0;
    }
  }
  return out;
}

KMeansResult kmeans(const FeatureMatrix& m, std::size_t k, std::uint64_t seed, std::size_t max_iter,
                    double tol) {
  const std::size_t n = m.rows();
  if (k == 0) throw Error(ErrorKind::kInsufficientData, "k must be positive");
  if (n < k) {
    throw Error(ErrorKind::kInsufficientData,
                "k-means needs at least " + std::to_string(k) + " rows, got " + std::to_string(n));
  }

  KMeansResult res;
  Rng rng(seed);
  const std::size_t first = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
  res.centroids.emplace_back(m.row(first).begin(), m.row(first).end());
  std::vector<double> min_d(n, std::numeric_limits<double>::infinity());
  while (res.centroids.size() < k) {
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t r = 0; r < n; ++r) {
      min_d[r] = std::min(min_d[r], squared_distance(m.row(r), res.centroids.back()));
      if (min_d[r] > far_d) {
        far_d = min_d[r];
        far = r;
      }
    }
    res.centroids.emplace_back(m.row(far).begin(), m.row(far).end());
  }

  res.assignments.assign(n, 0);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    for (std::size_t r = 0; r < n; ++r) res.assignments[r] = nearest(m.row(r), res.centroids);
    res.inertia_history.push_back(inertia_of(m, res.assignments, res.centroids));

    std::vector<std::vector<double>> next(k, std::vector<double>(m.cols, 0.0));
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t r = 0; r < n; ++r) {
      ++sizes[res.assignments[r]];
      auto& acc = next[res.assignments[r]];
      for (std::size_t c = 0; c < m.cols; ++c) acc[c] += m.at(r, c);
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] == 0) continue;
      for (double& x : next[c]) x /= static_cast<double>(sizes[c]);
    }
    // Repair empty clusters with the worst-fitting point of a cluster that
    // can spare one.
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t worst = n;
      double worst_d = -1.0;
      for (std::size_t r = 0; r < n; ++r) {
        const auto owner = res.assignments[r];
        if (sizes[owner] < 2) continue;
        const double d = squared_distance(m.row(r), next[owner]);
        if (d > worst_d) {
          worst_d = d;
          worst = r;
        }
      }
      const auto donor = res.assignments[worst];
      res.assignments[worst] = c;
      --sizes[donor];
      sizes[c] = 1;
      next[c].assign(m.row(worst).begin(), m.row(worst).end());
      std::fill(next[donor].begin(), next[donor].end(), 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        if (res.assignments[r] != donor) continue;
        for (std::size_t d = 0; d < m.cols; ++d) next[donor][d] += m.at(r, d);
      }
      for (double& x : next[donor]) x /= static_cast<double>(sizes[donor]);
    }

    double moved = 0.0;
    for (std::size_t c = 0; c < k; ++c) moved = std::max(moved, std::sqrt(squared_distance(next[c], res.centroids[c])));
    res.centroids = std::move(next);
    res.inertia_history.push_back(inertia_of(m, res.assignments, res.centroids));
    res.iterations = iter + 1;
    if (moved < tol) break;
  }

  for (std::size_t r = 0; r < n; ++r) res.assignments[r] = nearest(m.row(r), res.centroids);
  res.inertia = inertia_of(m, res.assignments, res.centroids);
  res.inertia_history.push_back(res.inertia);
  return res;
}

std::vector<EngagementLevel> cluster_levels(const std::vector<std::vector<double>>& centroids) {
  if (centroids.size() != 3) {
    throw Error(ErrorKind::kLevelMapping, "level mapping needs exactly 3 clusters");
  }
  auto score = [](const std::vector<double>& c) {
    const std::size_t dims = std::min<std::size_t>(kCountMetricCount, c.size());
    double s = 0.0;
    for (std::size_t d = 0; d < dims; ++d) s += c[d];
    return dims ? s / static_cast<double>(dims) : 0.0;
  };
  std::vector<std::size_t> rank{0, 1, 2};
  std::sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) {
    const double sa = score(centroids[a]);
    const double sb = score(centroids[b]);
    if (sa != sb) return sa < sb;
    const double la = centroids[a].empty() ? 0.0 : centroids[a][0];
    const double lb = centroids[b].empty() ? 0.0 : centroids[b][0];
    if (la != lb) return la < lb;
    return centroids[a] < centroids[b];
  });
  std::vector<EngagementLevel> out(3);
  for (std::size_t pos = 0; pos < 3; ++pos) out[rank[pos]] = kLevels[pos];
  return out;
}

std::vector<EngagementLevel> label_levels(const std::vector<std::vector<double>>& centroids,
                                          std::span<const std::size_t> assignments) {
  const auto levels = cluster_levels(centroids);
  std::vector<EngagementLevel> out;
  out.reserve(assignments.size());
  for (auto a : assignments) {
    if (a >= levels.size()) throw Error(ErrorKind::kLevelMapping, "assignment outside cluster range");
    out.push_back(levels[a]);
  }
  return out;
}

}  // namespace engage
