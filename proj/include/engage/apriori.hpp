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
#include <vector>

#include "engage/itemset.hpp"

namespace engage {

// Frequent itemsets grouped by size. Every stored set meets min_count and
// every (k-1)-subset of a stored k-set is stored at level k-1.
struct FrequentItemsetTable {
  double min_support = 0.0;
  std::uint64_t min_count = 0;
  std::uint64_t total = 0;
  std::map<std::size_t, std::vector<FrequentItemset>> levels;

  std::size_t size() const;
  std::vector<FrequentItemset> flatten() const;
};

// Joins size-(k-1) itemsets sharing their first k-2 items and drops any
// candidate with an infrequent (k-1)-subset. Throws kMalformedLevel on mixed
// sizes or empty itemsets.
std::vector<Itemset> candidate_join(std::span<const Itemset> prev_level);

// Level-wise mining. max_len = 0 means no cap on itemset size.
FrequentItemsetTable frequent_itemsets_apriori(const TransactionDb& db, double min_support,
                                               std::size_t max_len = 0);

}  // namespace engage
