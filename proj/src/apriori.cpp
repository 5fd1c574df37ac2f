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

#include "engage/apriori.hpp"

#include <algorithm>
#include <unordered_set>

#include "engage/error.hpp"

namespace engage {

std::size_t FrequentItemsetTable::size() const {
  std::size_t n = 0;
  for (const auto& [k, sets] : levels) n += sets.size();
  return n;
}

std::vector<FrequentItemset> FrequentItemsetTable::flatten() const {
  std::vector<FrequentItemset> out;
  out.reserve(size());
  for (const auto& [k, sets] : levels) out.insert(out.end(), sets.begin(), sets.end());
  return out;
}

std::vector<Itemset> candidate_join(std::span<const Itemset> prev_level) {
  if (prev_level.empty()) return {};
  const std::size_t width = prev_level.front().size();
  if (width == 0) throw Error(ErrorKind::kMalformedLevel, "level contains an empty itemset");
  for (const auto& s : prev_level) {
    if (s.size() != width) throw Error(ErrorKind::kMalformedLevel, "level mixes itemset sizes");
  }

  std::vector<Itemset> level(prev_level.begin(), prev_level.end());
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
  const std::unordered_set<Itemset, ItemsetHash> known(level.begin(), level.end());

  auto same_prefix = [width](const Itemset& a, const Itemset& b) {
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(width - 1), b.begin());
  };

  std::vector<Itemset> out;
  std::vector<ItemId> buffer;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = i + 1; j < level.size() && same_prefix(level[i], level[j]); ++j) {
      buffer.assign(level[i].begin(), level[i].end());
      buffer.push_back(level[j][width - 1]);
      Itemset candidate(buffer);

      // Full subset test: dropping either of the last two items yields one
      // of the joined parents, so only the others need checking.
      bool all_frequent = true;
      for (std::size_t drop = 0; drop + 2 < candidate.size() && all_frequent; ++drop) {
        std::vector<ItemId> sub;
        sub.reserve(width);
        for (std::size_t p = 0; p < candidate.size(); ++p) {
          if (p != drop) sub.push_back(candidate[p]);
        }
        all_frequent = known.contains(Itemset(std::move(sub)));
      }
      if (all_frequent) out.push_back(std::move(candidate));
    }
  }
  // Blocks are visited in sorted order, so out is already canonical.
  return out;
}

FrequentItemsetTable frequent_itemsets_apriori(const TransactionDb& db, double min_support,
                                               std::size_t max_len) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_support must lie in (0, 1]");
  }
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "cannot mine an empty database");

  FrequentItemsetTable table;
  table.min_support = min_support;
  table.total = db.size();
  table.min_count = min_count(min_support, db.size());
  const double m = static_cast<double>(db.size());
  const ItemUniverse& universe = db.universe();

  std::vector<FrequentItemset> current;
  const auto singles = db.item_counts();
  for (ItemId id = 0; id < singles.size(); ++id) {
    if (singles[id] >= table.min_count) {
      current.push_back({Itemset{id}, singles[id], static_cast<double>(singles[id]) / m});
    }
  }

  std::size_t k = 1;
  while (!current.empty()) {
    table.levels.emplace(k, current);
    if (max_len != 0 && k >= max_len) break;

    std::vector<Itemset> prev;
    prev.reserve(current.size());
    for (const auto& f : current) prev.push_back(f.items);
    auto candidates = candidate_join(prev);
    // A record holds one value per attribute; such candidates cannot occur.
    std::erase_if(candidates, [&](const Itemset& c) { return !c.valid_in(universe); });

    const auto counts = db.count_all(candidates);
    current.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (counts[i] >= table.min_count) {
        current.push_back({std::move(candidates[i]), counts[i], static_cast<double>(counts[i]) / m});
      }
    }
    ++k;
  }
  return table;
}

}  // namespace engage
