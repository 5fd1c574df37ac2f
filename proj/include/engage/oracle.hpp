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
#include <string>
#include <vector>

#include "engage/gsp.hpp"
#include "engage/itemset.hpp"
#include "engage/mining.hpp"

namespace engage::oracle {

// Exhaustive reference implementations. They share no code paths with the
// miners beyond the Itemset value type and are meant for small inputs only.

// Every nonempty itemset with at most one value per attribute, counted by a
// direct scan. Throws kOracleSize when more than 20 distinct items occur.
std::vector<FrequentItemset> brute_force_frequent_itemsets(const TransactionDb& db,
                                                           double min_support);

// Every rule X => Y with X, Y disjoint, X u Y frequent and
// |X u Y| <= cfg.max_rule_len, evaluated from the definitions and filtered by
// the thresholds in cfg. Sorted with rule_order.
std::vector<ScoredRule> brute_force_rules(const TransactionDb& db, const MiningConfig& cfg);

// Every token tuple of length 1..max_len over the observed alphabet, counted
// by order-preserving containment. Guards: alphabet <= 6, max_len <= 4,
// sequences <= 15 (kOracleSize).
std::vector<SequencePattern> brute_force_sequences(const std::vector<std::vector<std::string>>& sequences,
                                                   double min_support, std::size_t max_len);

}  // namespace engage::oracle
