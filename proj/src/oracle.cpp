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

#include "engage/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "engage/error.hpp"

namespace engage::oracle {

namespace {

bool threshold_met(std::uint64_t count, std::uint64_t total, double min_support) {
  return static_cast<double>(count) >= min_support * static_cast<double>(total) - 1e-9;
}

std::uint64_t scan_count(const TransactionDb& db, const std::vector<ItemId>& items) {
  std::uint64_t n = 0;
  for (const auto& t : db.transactions()) {
    bool all = true;
    for (ItemId id : items) {
      bool found = false;
      for (ItemId x : t) found = found || x == id;
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) ++n;
  }
  return n;
}

}  // namespace

std::vector<FrequentItemset> brute_force_frequent_itemsets(const TransactionDb& db,
                                                           double min_support) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_support must lie in (0, 1]");
  }
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "oracle needs a nonempty database");
  std::set<ItemId> present;
  for (const auto& t : db.transactions()) present.insert(t.begin(), t.end());
  if (present.size() > 20) throw Error(ErrorKind::kOracleSize, "oracle limited to 20 distinct items");

  const std::vector<ItemId> items(present.begin(), present.end());
  const std::size_t n = items.size();
  std::vector<FrequentItemset> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<ItemId> chosen;
    std::set<std::uint32_t> attributes;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      chosen.push_back(items[i]);
      ok = attributes.insert(db.universe().attribute_of(items[i])).second;
    }
    if (!ok) continue;
    const auto c = scan_count(db, chosen);
    if (threshold_met(c, db.size(), min_support)) {
      out.push_back({Itemset(chosen), c, static_cast<double>(c) / static_cast<double>(db.size())});
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<ScoredRule> brute_force_rules(const TransactionDb& db, const MiningConfig& cfg) {
  const auto frequent = brute_force_frequent_itemsets(db, cfg.min_support);
  const double m = static_cast<double>(db.size());
  std::vector<ScoredRule> out;
  for (const auto& f : frequent) {
    const std::size_t k = f.items.size();
    if (k < 2 || (cfg.max_rule_len != 0 && k > cfg.max_rule_len)) continue;
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<ItemId> lhs, rhs;
      for (std::size_t i = 0; i < k; ++i) ((mask & (1u << i)) ? lhs : rhs).push_back(f.items[i]);
      const auto cx = scan_count(db, lhs);
      const auto cy = scan_count(db, rhs);
      const auto cxy = f.count;
      // Definitions: supp = cxy/m, conf = supp(XY)/supp(X), lift = supp(XY)/(supp(X) supp(Y)).
      const double supp = static_cast<double>(cxy) / m;
      const double conf = supp / (static_cast<double>(cx) / m);
      const double lift = supp / ((static_cast<double>(cx) / m) * (static_cast<double>(cy) / m));
      if (conf < cfg.min_confidence - 1e-9 || !(lift > cfg.min_lift + 1e-12)) continue;
      RuleMetrics metrics;
      metrics.count_xy = cxy;
      metrics.count_x = cx;
      metrics.count_y = cy;
      metrics.total = db.size();
      metrics.support = supp;
      metrics.confidence = conf;
      metrics.lift = lift;
      out.emplace_back(AssociationRule(Itemset(lhs), Itemset(rhs)), metrics);
    }
  }
  std::sort(out.begin(), out.end(), [](const ScoredRule& a, const ScoredRule& b) {
    if (a.first.antecedent != b.first.antecedent) return a.first.antecedent < b.first.antecedent;
    return a.first.consequent < b.first.consequent;
  });
  return out;
}

std::vector<SequencePattern> brute_force_sequences(const std::vector<std::vector<std::string>>& sequences,
                                                   double min_support, std::size_t max_len) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_support must lie in (0, 1]");
  }
  if (sequences.size() > 15 || max_len > 4) {
    throw Error(ErrorKind::kOracleSize, "sequence oracle limited to 15 sequences and max_len 4");
  }
  std::set<std::string> alphabet_set;
  for (const auto& s : sequences) alphabet_set.insert(s.begin(), s.end());
  if (alphabet_set.size() > 6) throw Error(ErrorKind::kOracleSize, "sequence oracle limited to 6 tokens");
  if (sequences.empty()) return {};
  const std::vector<std::string> alphabet(alphabet_set.begin(), alphabet_set.end());

  std::vector<SequencePattern> out;
  std::vector<std::size_t> digits;
  for (std::size_t len = 1; len <= max_len; ++len) {
    digits.assign(len, 0);
    while (true) {
      std::vector<std::string> pattern;
      for (auto d : digits) pattern.push_back(alphabet[d]);
      std::uint64_t c = 0;
      for (const auto& s : sequences) {
        std::size_t p = 0;
        for (const auto& tok : s) {
          if (p < pattern.size() && tok == pattern[p]) ++p;
        }
        if (p == pattern.size()) ++c;
      }
      if (threshold_met(c, sequences.size(), min_support)) {
        out.push_back({pattern, c, static_cast<double>(c) / static_cast<double>(sequences.size())});
      }
      std::size_t pos = len;
      while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

}  // namespace engage::oracle
