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

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace engage {

// An attribute=value token. Attribute names are nonempty; values come from
// the attribute's declared domain in an ItemUniverse.
struct Item {
  std::string attribute;
  std::string value;

  friend bool operator==(const Item&, const Item&) = default;
};

// Orders value tokens numerically when both parse as numbers, otherwise
// lexicographically; numbers sort before non-numbers.
bool natural_value_less(const std::string& a, const std::string& b);

using ItemId = std::uint32_t;

// The declared set of attributes and their finite, ordered value domains.
// Item ids are dense and assigned in canonical order (attribute name
// lexicographic, then position in the attribute's domain), so comparing ids
// compares items canonically.
class ItemUniverse {
 public:
  ItemUniverse() = default;
  explicit ItemUniverse(const std::map<std::string, std::vector<std::string>>& domains);

  // Domains collected from the data, values sorted with natural_value_less.
  static ItemUniverse infer(const std::vector<std::vector<Item>>& records,
                            const std::vector<Item>& extra = {});

  std::size_t size() const { return items_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  const Item& item(ItemId id) const { return items_.at(id); }
  std::uint32_t attribute_of(ItemId id) const { return attribute_index_.at(id); }
  const std::string& attribute_name(std::uint32_t index) const { return attributes_.at(index); }

  std::optional<ItemId> find(const std::string& attribute, const std::string& value) const;
  ItemId id(const Item& item) const;  // throws kInvalidItem when undeclared

  // "attr=value", or "attr<50" / "attr>=90" when the value is a comparison band.
  std::string label(ItemId id) const;

 private:
  std::vector<std::string> attributes_;
  std::vector<Item> items_;
  std::vector<std::uint32_t> attribute_index_;
  std::map<std::pair<std::string, std::string>, ItemId> lookup_;
};

// A canonically sorted, duplicate-free set of item ids.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> ids);
  explicit Itemset(std::vector<ItemId> ids);

  std::span<const ItemId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  ItemId operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool contains(ItemId id) const;
  bool is_subset_of(const Itemset& other) const;
  bool disjoint_from(const Itemset& other) const;
  Itemset united(const Itemset& other) const;
  Itemset minus(const Itemset& other) const;

  // True when no two items share an attribute and every id is declared.
  bool valid_in(const ItemUniverse& universe) const;

  std::string to_string(const ItemUniverse& universe) const;

  friend auto operator<=>(const Itemset&, const Itemset&) = default;

 private:
  std::vector<ItemId> ids_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept;
};

// Immutable collection of m transactions over a declared item universe.
// Safe to share between threads.
class TransactionDb {
 public:
  TransactionDb(std::shared_ptr<const ItemUniverse> universe,
                std::vector<Itemset> transactions,
                std::vector<std::string> record_ids = {});

  // Convenience: encode item records against a universe inferred from them.
  static TransactionDb from_items(const std::vector<std::vector<Item>>& records,
                                  const std::vector<Item>& extra_items = {},
                                  std::vector<std::string> record_ids = {});

  const ItemUniverse& universe() const { return *universe_; }
  std::shared_ptr<const ItemUniverse> universe_ptr() const { return universe_; }
  std::span<const Itemset> transactions() const { return transactions_; }
  const std::vector<std::string>& record_ids() const { return record_ids_; }
  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  // Exact number of transactions containing x.
  std::uint64_t count(const Itemset& x) const;
  // Counts for many itemsets in one pass over the transactions.
  std::vector<std::uint64_t> count_all(std::span<const Itemset> sets) const;
  // Per-item occurrence counts indexed by ItemId.
  std::vector<std::uint64_t> item_counts() const;

 private:
  std::shared_ptr<const ItemUniverse> universe_;
  std::vector<Itemset> transactions_;
  std::vector<std::string> record_ids_;
};

struct AssociationRule {
  AssociationRule(Itemset antecedent, Itemset consequent);

  Itemset antecedent;
  Itemset consequent;

  Itemset items() const { return antecedent.united(consequent); }
  std::string to_string(const ItemUniverse& universe) const;

  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

// Support, confidence and lift derived from integer co-occurrence counts,
// each divided once.
struct RuleMetrics {
  std::uint64_t count_xy = 0;
  std::uint64_t count_x = 0;
  std::uint64_t count_y = 0;
  std::uint64_t total = 0;
  double support = 0.0;
  double confidence = 0.0;
  double lift = 0.0;

  static RuleMetrics from_counts(std::uint64_t count_xy, std::uint64_t count_x,
                                 std::uint64_t count_y, std::uint64_t total);

  friend bool operator==(const RuleMetrics&, const RuleMetrics&) = default;
};

using ScoredRule = std::pair<AssociationRule, RuleMetrics>;

struct FrequentItemset {
  Itemset items;
  std::uint64_t count = 0;
  double support = 0.0;

  friend bool operator==(const FrequentItemset&, const FrequentItemset&) = default;
};

// Size ascending, then canonical item order.
void sort_canonical(std::vector<FrequentItemset>& sets);

double support(const Itemset& x, const TransactionDb& db);
double confidence(const AssociationRule& rule, const TransactionDb& db);
double lift(const AssociationRule& rule, const TransactionDb& db);
RuleMetrics evaluate(const AssociationRule& rule, const TransactionDb& db);

// Smallest transaction count C with C / m >= min_support, i.e.
// ceil(min_support * m) with a tolerance for products like 0.1 * 500.
// Throws kInvalidThreshold unless 0 < min_support <= 1.
std::uint64_t min_count(double min_support, std::uint64_t m);

// numerator / denominator >= threshold, robust to the representation error
// of decimal thresholds.
bool ratio_at_least(std::uint64_t numerator, std::uint64_t denominator, double threshold);

using CountLookup = std::function<std::uint64_t(const Itemset&)>;

// Every split X => (frequent \ X) with confidence >= min_conf, ordered by
// antecedent size then canonical antecedent order. Counts come from lookup.
std::vector<ScoredRule> expand_rules(const Itemset& frequent, const CountLookup& lookup,
                                     std::uint64_t total, double min_conf);

std::vector<ScoredRule> rules_from_itemset(const Itemset& frequent, const TransactionDb& db,
                                           double min_conf);

}  // namespace engage
