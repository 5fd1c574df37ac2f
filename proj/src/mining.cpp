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

#include "engage/mining.hpp"

#include <algorithm>
#include <unordered_map>

#include "engage/apriori.hpp"
#include "engage/error.hpp"
#include "engage/fpgrowth.hpp"

namespace engage {

const char* to_string(Algorithm a) {
  return a == Algorithm::kApriori ? "apriori" : "fpgrowth";
}

const char* to_string(GradeBucketing b) {
  return b == GradeBucketing::kBanded ? "banded" : "exact-10s";
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "apriori") return Algorithm::kApriori;
  if (s == "fpgrowth") return Algorithm::kFpGrowth;
  throw Error(ErrorKind::kInvalidSpec, "unknown algorithm '" + s + "'");
}

GradeBucketing parse_grade_bucketing(const std::string& s) {
  if (s == "banded") return GradeBucketing::kBanded;
  if (s == "exact-10s") return GradeBucketing::kExact10s;
  throw Error(ErrorKind::kInvalidSpec, "unknown grade bucketing '" + s + "'");
}

void MiningConfig::validate() const {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_support must lie in (0, 1]");
  }
  if (!(min_confidence >= 0.0 && min_confidence <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_confidence must lie in [0, 1]");
  }
  if (!(min_lift >= 0.0)) throw Error(ErrorKind::kInvalidThreshold, "min_lift must be nonnegative");
  if (max_rule_len == 1) {
    throw Error(ErrorKind::kInvalidThreshold, "max_rule_len must be at least 2 (or 0 for no cap)");
  }
}

bool rule_order(const ScoredRule& a, const ScoredRule& b) {
  if (a.second.lift != b.second.lift) return a.second.lift > b.second.lift;
  if (a.second.confidence != b.second.confidence) return a.second.confidence > b.second.confidence;
  if (a.first.antecedent != b.first.antecedent) return a.first.antecedent < b.first.antecedent;
  return a.first.consequent < b.first.consequent;
}

bool passes(const RuleMetrics& m, const MiningConfig& cfg) {
  return ratio_at_least(m.count_xy, m.total, cfg.min_support) &&
         ratio_at_least(m.count_xy, m.count_x, cfg.min_confidence) && m.lift > cfg.min_lift;
}

std::vector<ScoredRule> rules_from_frequent(const std::vector<FrequentItemset>& frequent,
                                            std::uint64_t total, const MiningConfig& cfg) {
  std::unordered_map<Itemset, std::uint64_t, ItemsetHash> counts;
  counts.reserve(frequent.size());
  for (const auto& f : frequent) counts.emplace(f.items, f.count);
  auto lookup = [&counts](const Itemset& s) -> std::uint64_t {
    auto it = counts.find(s);
    if (it == counts.end()) {
      throw Error(ErrorKind::kMalformedLevel, "frequent collection is not downward closed");
    }
    return it->second;
  };

  std::vector<ScoredRule> rules;
  for (const auto& f : frequent) {
    if (f.items.size() < 2) continue;
    for (auto& rule : expand_rules(f.items, lookup, total, cfg.min_confidence)) {
      if (passes(rule.second, cfg)) rules.push_back(std::move(rule));
    }
  }
  std::sort(rules.begin(), rules.end(), rule_order);
  return rules;
}

std::vector<ScoredRule> mine_rules(const TransactionDb& db, const MiningConfig& cfg) {
  cfg.validate();
  std::vector<FrequentItemset> frequent;
  if (cfg.algorithm == Algorithm::kApriori) {
    frequent = frequent_itemsets_apriori(db, cfg.min_support, cfg.max_rule_len).flatten();
  } else {
    frequent = fp_growth(build_fp_tree(db, cfg.min_support), cfg.min_support, cfg.max_rule_len);
  }
  return rules_from_frequent(frequent, db.size(), cfg);
}

}  // namespace engage
