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

#include "engage/itemset.hpp"

namespace engage {

enum class Algorithm { kApriori, kFpGrowth };
enum class GradeBucketing { kExact10s, kBanded };

const char* to_string(Algorithm a);
const char* to_string(GradeBucketing b);
Algorithm parse_algorithm(const std::string& s);
GradeBucketing parse_grade_bucketing(const std::string& s);

// Defaults are the thresholds the engagement study used: support 0.1 and
// confidence 0.9. Rules must have lift strictly above min_lift.
struct MiningConfig {
  double min_support = 0.1;
  double min_confidence = 0.9;
  double min_lift = 1.0;
  Algorithm algorithm = Algorithm::kApriori;
  GradeBucketing grade_bucketing = GradeBucketing::kBanded;
  std::size_t max_rule_len = 4;  // 0: unbounded

  void validate() const;  // throws kInvalidThreshold
};

// Lift descending, then confidence descending, then canonical antecedent and
// consequent order.
bool rule_order(const ScoredRule& a, const ScoredRule& b);

bool passes(const RuleMetrics& m, const MiningConfig& cfg);

// Rules from an already-mined frequent collection. The collection must be
// downward closed so every split's counts can be looked up.
std::vector<ScoredRule> rules_from_frequent(const std::vector<FrequentItemset>& frequent,
                                            std::uint64_t total, const MiningConfig& cfg);

// Mines frequent itemsets with the configured back end, then expands and
// filters rules. Output is sorted with rule_order.
std::vector<ScoredRule> mine_rules(const TransactionDb& db, const MiningConfig& cfg);

}  // namespace engage
