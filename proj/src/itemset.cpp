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

#include "engage/itemset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "engage/error.hpp"
#include "engage/parallel.hpp"

namespace engage {

namespace {

std::optional<double> as_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return v;
}

}  // namespace

bool natural_value_less(const std::string& a, const std::string& b) {
  const auto na = as_number(a);
  const auto nb = as_number(b);
  if (na && nb) {
    if (*na != *nb) return *na < *nb;
    return a < b;
  }
  if (na) return true;
  if (nb) return false;
  return a < b;
}

// ---------------------------------------------------------------------------
// ItemUniverse

ItemUniverse::ItemUniverse(const std::map<std::string, std::vector<std::string>>& domains) {
  for (const auto& [attribute, values] : domains) {
    if (attribute.empty()) throw Error(ErrorKind::kInvalidItem, "attribute name must be nonempty");
    const auto index = static_cast<std::uint32_t>(attributes_.size());
    attributes_.push_back(attribute);
    for (const auto& value : values) {
      const auto id = static_cast<ItemId>(items_.size());
      if (!lookup_.emplace(std::make_pair(attribute, value), id).second) {
        throw Error(ErrorKind::kInvalidItem,
                    "duplicate value '" + value + "' in domain of " + attribute);
      }
      items_.push_back(Item{attribute, value});
      attribute_index_.push_back(index);
    }
  }
}

ItemUniverse ItemUniverse::infer(const std::vector<std::vector<Item>>& records,
                                 const std::vector<Item>& extra) {
  std::map<std::string, std::set<std::string>> seen;
  for (const auto& record : records) {
    for (const auto& item : record) seen[item.attribute].insert(item.value);
  }
  for (const auto& item : extra) seen[item.attribute].insert(item.value);

  std::map<std::string, std::vector<std::string>> domains;
  for (auto& [attribute, values] : seen) {
    std::vector<std::string> ordered(values.begin(), values.end());
    std::sort(ordered.begin(), ordered.end(), natural_value_less);
    domains.emplace(attribute, std::move(ordered));
  }
  return ItemUniverse(domains);
}

std::optional<ItemId> ItemUniverse::find(const std::string& attribute,
                                         const std::string& value) const {
  auto it = lookup_.find({attribute, value});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

ItemId ItemUniverse::id(const Item& item) const {
  if (auto found = find(item.attribute, item.value)) return *found;
  throw Error(ErrorKind::kInvalidItem,
              "item " + item.attribute + "=" + item.value + " is not in the declared universe");
}

std::string ItemUniverse::label(ItemId id) const {
  const Item& it = item(id);
  if (!it.value.empty() && (it.value.front() == '<' || it.value.front() == '>')) {
    return it.attribute + it.value;
  }
  return it.attribute + "=" + it.value;
}

// ---------------------------------------------------------------------------
// Itemset

Itemset::Itemset(std::initializer_list<ItemId> ids) : Itemset(std::vector<ItemId>(ids)) {}

Itemset::Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Itemset::contains(ItemId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool Itemset::disjoint_from(const Itemset& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Itemset Itemset::united(const Itemset& other) const {
  std::vector<ItemId> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  Itemset s;
  s.ids_ = std::move(out);
  return s;
}

Itemset Itemset::minus(const Itemset& other) const {
  std::vector<ItemId> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out));
  Itemset s;
  s.ids_ = std::move(out);
  return s;
}

bool Itemset::valid_in(const ItemUniverse& universe) const {
  std::set<std::uint32_t> attributes;
  for (ItemId id : ids_) {
    if (id >= universe.size()) return false;
    if (!attributes.insert(universe.attribute_of(id)).second) return false;
  }
  return true;
}

std::string Itemset::to_string(const ItemUniverse& universe) const {
  std::string out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i) out += " & ";
    out += universe.label(ids_[i]);
  }
  return out;
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (ItemId id : s) {
    h ^= id + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// TransactionDb

TransactionDb::TransactionDb(std::shared_ptr<const ItemUniverse> universe,
                             std::vector<Itemset> transactions,
                             std::vector<std::string> record_ids)
    : universe_(std::move(universe)),
      transactions_(std::move(transactions)),
      record_ids_(std::move(record_ids)) {
  if (!universe_) universe_ = std::make_shared<const ItemUniverse>();
  if (record_ids_.empty()) {
    record_ids_.reserve(transactions_.size());
    for (std::size_t i = 0; i < transactions_.size(); ++i) record_ids_.push_back(std::to_string(i));
  }
  if (record_ids_.size() != transactions_.size()) {
    throw Error(ErrorKind::kInvalidItem, "record id count does not match transaction count");
  }
  for (std::size_t i = 0; i < transactions_.size(); ++i) {
    if (!transactions_[i].valid_in(*universe_)) {
      throw Error(ErrorKind::kInvalidItem,
                  "transaction " + record_ids_[i] +
                      " has an undeclared item or two values of one attribute");
    }
  }
}

TransactionDb TransactionDb::from_items(const std::vector<std::vector<Item>>& records,
                                        const std::vector<Item>& extra_items,
                                        std::vector<std::string> record_ids) {
  auto universe = std::make_shared<const ItemUniverse>(ItemUniverse::infer(records, extra_items));
  std::vector<Itemset> transactions;
  transactions.reserve(records.size());
  for (const auto& record : records) {
    std::vector<ItemId> ids;
    ids.reserve(record.size());
    for (const auto& item : record) ids.push_back(universe->id(item));
    const std::size_t before = ids.size();
    Itemset t(std::move(ids));
    if (t.size() != before) throw Error(ErrorKind::kInvalidItem, "duplicate item in a record");
    transactions.push_back(std::move(t));
  }
  return TransactionDb(std::move(universe), std::move(transactions), std::move(record_ids));
}

std::uint64_t TransactionDb::count(const Itemset& x) const {
  std::uint64_t n = 0;
  for (const auto& t : transactions_) {
    if (x.is_subset_of(t)) ++n;
  }
  return n;
}

std::vector<std::uint64_t> TransactionDb::count_all(std::span<const Itemset> sets) const {
  const std::size_t m = transactions_.size();
  const std::size_t min_chunk = std::max<std::size_t>(64, 200000 / (sets.size() + 1));
  const std::size_t chunks = chunk_count(m, min_chunk);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(sets.size(), 0));
  parallel_chunks(m, min_chunk, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    auto& counts = partial[chunk];
    for (std::size_t t = begin; t < end; ++t) {
      const Itemset& tx = transactions_[t];
      for (std::size_t s = 0; s < sets.size(); ++s) {
        if (sets[s].size() <= tx.size() && sets[s].is_subset_of(tx)) ++counts[s];
      }
    }
  });
  std::vector<std::uint64_t> total(sets.size(), 0);
  for (const auto& counts : partial) {
    for (std::size_t s = 0; s < sets.size(); ++s) total[s] += counts[s];
  }
  return total;
}

std::vector<std::uint64_t> TransactionDb::item_counts() const {
  std::vector<std::uint64_t> counts(universe_->size(), 0);
  for (const auto& t : transactions_) {
    for (ItemId id : t) ++counts[id];
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Rules and metrics

AssociationRule::AssociationRule(Itemset lhs, Itemset rhs)
    : antecedent(std::move(lhs)), consequent(std::move(rhs)) {
  if (antecedent.empty() || consequent.empty()) {
    throw Error(ErrorKind::kInvalidItem, "rule sides must be nonempty");
  }
  if (!antecedent.disjoint_from(consequent)) {
    throw Error(ErrorKind::kInvalidItem, "rule antecedent and consequent overlap");
  }
}

std::string AssociationRule::to_string(const ItemUniverse& universe) const {
  return antecedent.to_string(universe) + " => " + consequent.to_string(universe);
}

RuleMetrics RuleMetrics::from_counts(std::uint64_t count_xy, std::uint64_t count_x,
                                     std::uint64_t count_y, std::uint64_t total) {
  if (total == 0) throw Error(ErrorKind::kEmptyDatabase, "metrics are undefined on an empty database");
  if (count_x == 0) throw Error(ErrorKind::kZeroAntecedentSupport, "antecedent never occurs");
  if (count_y == 0) throw Error(ErrorKind::kZeroMarginalSupport, "consequent never occurs");
  RuleMetrics r;
  r.count_xy = count_xy;
  r.count_x = count_x;
  r.count_y = count_y;
  r.total = total;
  r.support = static_cast<double>(count_xy) / static_cast<double>(total);
  r.confidence = static_cast<double>(count_xy) / static_cast<double>(count_x);
  // Both products are commutative, so lift(X=>Y) == lift(Y=>X) bit for bit.
  r.lift = (static_cast<double>(count_xy) * static_cast<double>(total)) /
           (static_cast<double>(count_x) * static_cast<double>(count_y));
  return r;
}

double support(const Itemset& x, const TransactionDb& db) {
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "support is undefined on an empty database");
  if (!x.valid_in(db.universe())) {
    throw Error(ErrorKind::kInvalidItem, "itemset is not valid in the database universe");
  }
  return static_cast<double>(db.count(x)) / static_cast<double>(db.size());
}

double confidence(const AssociationRule& rule, const TransactionDb& db) {
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "confidence is undefined on an empty database");
  const auto cx = db.count(rule.antecedent);
  if (cx == 0) throw Error(ErrorKind::kZeroAntecedentSupport, "antecedent never occurs");
  return static_cast<double>(db.count(rule.items())) / static_cast<double>(cx);
}

double lift(const AssociationRule& rule, const TransactionDb& db) {
  return evaluate(rule, db).lift;
}

RuleMetrics evaluate(const AssociationRule& rule, const TransactionDb& db) {
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "metrics are undefined on an empty database");
  const auto cx = db.count(rule.antecedent);
  const auto cy = db.count(rule.consequent);
  if (cx == 0 || cy == 0) {
    throw Error(ErrorKind::kZeroMarginalSupport, "rule side with zero support");
  }
  return RuleMetrics::from_counts(db.count(rule.items()), cx, cy, db.size());
}

void sort_canonical(std::vector<FrequentItemset>& sets) {
  std::sort(sets.begin(), sets.end(), [](const FrequentItemset& a, const FrequentItemset& b) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    return a.items < b.items;
  });
}

std::uint64_t min_count(double min_support, std::uint64_t m) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_support must lie in (0, 1]");
  }
  const double exact = min_support * static_cast<double>(m);
  const auto c = static_cast<std::uint64_t>(std::ceil(exact - 1e-9));
  return std::max<std::uint64_t>(1, c);
}

bool ratio_at_least(std::uint64_t numerator, std::uint64_t denominator, double threshold) {
  return static_cast<double>(numerator) >= threshold * static_cast<double>(denominator) - 1e-9;
}

std::vector<ScoredRule> expand_rules(const Itemset& frequent, const CountLookup& lookup,
                                     std::uint64_t total, double min_conf) {
  const std::size_t k = frequent.size();
  if (k < 2) throw Error(ErrorKind::kTooSmallItemset, "rule expansion needs at least two items");
  if (k > 30) throw Error(ErrorKind::kTooSmallItemset, "itemset too large for rule expansion");

  std::vector<Itemset> antecedents;
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<ItemId> ids;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) ids.push_back(frequent[i]);
    }
    antecedents.emplace_back(std::move(ids));
  }
  std::sort(antecedents.begin(), antecedents.end(), [](const Itemset& a, const Itemset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  const std::uint64_t count_xy = lookup(frequent);
  std::vector<ScoredRule> out;
  for (auto& lhs : antecedents) {
    Itemset rhs = frequent.minus(lhs);
    const std::uint64_t cx = lookup(lhs);
    if (cx == 0 || !ratio_at_least(count_xy, cx, min_conf)) continue;
    const std::uint64_t cy = lookup(rhs);
    auto metrics = RuleMetrics::from_counts(count_xy, cx, cy, total);
    out.emplace_back(AssociationRule(std::move(lhs), std::move(rhs)), metrics);
  }
  return out;
}

std::vector<ScoredRule> rules_from_itemset(const Itemset& frequent, const TransactionDb& db,
                                           double min_conf) {
  if (frequent.size() < 2) {
    throw Error(ErrorKind::kTooSmallItemset, "rule expansion needs at least two items");
  }
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "rules are undefined on an empty database");
  return expand_rules(
      frequent, [&db](const Itemset& s) { return db.count(s); }, db.size(), min_conf);
}

}  // namespace engage
