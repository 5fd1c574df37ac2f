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

#include <cmath>

#include "doctest.h"
#include "engage/error.hpp"
#include "engage/itemset.hpp"
#include "test_support.hpp"

using namespace engage;
using engage::testing::letters;
using engage::testing::set_of;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected engage::Error");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("universe orders items by attribute then declared value") {
  ItemUniverse u({{"b", {"L", "M", "H"}}, {"a", {"10", "2"}}});
  REQUIRE(u.size() == 5);
  CHECK(u.item(0) == Item{"a", "10"});
  CHECK(u.item(1) == Item{"a", "2"});
  CHECK(u.item(2) == Item{"b", "L"});
  CHECK(u.item(4) == Item{"b", "H"});
  CHECK(u.attribute_of(3) == 1);
  CHECK(kind_of([&] { u.id({"c", "1"}); }) == ErrorKind::kInvalidItem);
}

TEST_CASE("inferred domains sort numerically before lexically") {
  auto u = ItemUniverse::infer({{{"x", "100"}}, {{"x", "20"}}, {{"x", "3"}}, {{"x", "H"}}});
  CHECK(u.item(0).value == "3");
  CHECK(u.item(1).value == "20");
  CHECK(u.item(2).value == "100");
  CHECK(u.item(3).value == "H");
}

TEST_CASE("labels render comparison bands without an equals sign") {
  ItemUniverse u({{"CourseGrade", {"<50", "70-89", ">=90"}}});
  CHECK(u.label(0) == "CourseGrade<50");
  CHECK(u.label(1) == "CourseGrade=70-89");
  CHECK(u.label(2) == "CourseGrade>=90");
}

TEST_CASE("transactions may not hold two values of one attribute") {
  CHECK(kind_of([] { TransactionDb::from_items({{{"a", "1"}, {"a", "2"}}}); }) == ErrorKind::kInvalidItem);
}

TEST_CASE("itemset set algebra") {
  Itemset a{3, 1, 2, 2};
  CHECK(a.size() == 3);
  CHECK(a[0] == 1);
  CHECK(Itemset{1, 3}.is_subset_of(a));
  CHECK_FALSE(Itemset{4}.is_subset_of(a));
  CHECK(a.minus(Itemset{2}) == Itemset{1, 3});
  CHECK(Itemset{1}.united(Itemset{5}) == Itemset{1, 5});
  CHECK(Itemset{1}.disjoint_from(Itemset{2}));
  CHECK_FALSE(a.disjoint_from(Itemset{3}));
}

TEST_CASE("support examples") {
  auto db = letters({"ab", "a", "bc"}, "z");
  CHECK(support(set_of(db, "a"), db) == 2.0 / 3.0);
  CHECK(support(Itemset{}, db) == 1.0);
  CHECK(support(set_of(db, "z"), db) == 0.0);
}

TEST_CASE("support on an empty database is an error") {
  auto db = letters({});
  CHECK(kind_of([&] { support(Itemset{}, db); }) == ErrorKind::kEmptyDatabase);
}

TEST_CASE("confidence examples") {
  auto db = letters({"ab", "ab", "a", "b"});
  CHECK(confidence({set_of(db, "a"), set_of(db, "b")}, db) == 2.0 / 3.0);

  auto implied = letters({"ab", "ab", "b", "c"});
  CHECK(confidence({set_of(implied, "a"), set_of(implied, "b")}, implied) == 1.0);

  auto apart = letters({"a", "b"});
  CHECK(confidence({set_of(apart, "a"), set_of(apart, "b")}, apart) == 0.0);

  auto absent = letters({"b", "b"}, "a");
  CHECK(kind_of([&] { confidence({set_of(absent, "a"), set_of(absent, "b")}, absent); }) ==
        ErrorKind::kZeroAntecedentSupport);
}

TEST_CASE("lift examples") {
  auto db = letters({"ab", "ab", "a", "b"});
  CHECK(lift({set_of(db, "a"), set_of(db, "b")}, db) == 8.0 / 9.0);

  auto full = letters({"ab", "ab", "ab", "ab"});
  CHECK(lift({set_of(full, "a"), set_of(full, "b")}, full) == 1.0);

  auto rare = letters({"ab", "c", "d", "e"});
  const auto m = evaluate({set_of(rare, "a"), set_of(rare, "b")}, rare);
  CHECK(m.confidence == 1.0);
  CHECK(m.lift == 4.0);
  CHECK(m.support == 0.25);

  auto absent = letters({"a", "a"}, "b");
  CHECK(kind_of([&] { lift({set_of(absent, "a"), set_of(absent, "b")}, absent); }) ==
        ErrorKind::kZeroMarginalSupport);
}

TEST_CASE("rules need disjoint nonempty sides") {
  CHECK(kind_of([] { AssociationRule(Itemset{}, Itemset{1}); }) == ErrorKind::kInvalidItem);
  CHECK(kind_of([] { AssociationRule(Itemset{1, 2}, Itemset{2}); }) == ErrorKind::kInvalidItem);
}

TEST_CASE("rules_from_itemset examples") {
  auto db = letters({"ab", "ab", "a", "b"});
  const auto ab = set_of(db, "ab");

  auto rules = rules_from_itemset(ab, db, 0.6);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].first.antecedent == set_of(db, "a"));
  CHECK(rules[0].first.consequent == set_of(db, "b"));
  CHECK(rules[0].second.confidence == 2.0 / 3.0);
  CHECK(rules[1].first.antecedent == set_of(db, "b"));
  CHECK(rules[1].second.lift == rules[0].second.lift);

  CHECK(rules_from_itemset(ab, db, 0.9).empty());
  CHECK(kind_of([&] { rules_from_itemset(set_of(db, "a"), db, 0.5); }) == ErrorKind::kTooSmallItemset);
}

TEST_CASE("rules_from_itemset orders by antecedent size then canonical order") {
  auto db = letters({"abc", "abc", "abc"});
  const auto rules = rules_from_itemset(set_of(db, "abc"), db, 0.0);
  REQUIRE(rules.size() == 6);
  const std::vector<std::string> expected = {"a", "b", "c", "ab", "ac", "bc"};
  for (std::size_t i = 0; i < rules.size(); ++i) {
    CHECK(rules[i].first.antecedent == set_of(db, expected[i]));
  }
}

TEST_CASE("min_count converts support to an integer threshold") {
  CHECK(min_count(0.1, 500) == 50);
  CHECK(min_count(0.1, 30) == 3);
  CHECK(min_count(0.5, 3) == 2);
  CHECK(min_count(1.0, 7) == 7);
  CHECK(min_count(0.01, 10) == 1);
  CHECK(min_count(2.0 / 3.0, 3) == 2);
  CHECK(kind_of([] { min_count(0.0, 10); }) == ErrorKind::kInvalidThreshold);
  CHECK(kind_of([] { min_count(1.5, 10); }) == ErrorKind::kInvalidThreshold);
}

TEST_CASE("metric properties on random databases") {
  Rng rng(2024);
  for (int round = 0; round < 150; ++round) {
    const auto db = engage::testing::random_db(rng);
    const auto& u = db.universe();
    // Random X within one transaction, then random superset drawn from a
    // transaction that also contains X (or any transaction).
    const auto& t = db.transactions()[rng.uniform_int(0, db.size() - 1)];
    std::vector<ItemId> xs, ys;
    for (ItemId id : t) (rng.bernoulli(0.5) ? xs : ys).push_back(id);
    const Itemset x(xs);
    const Itemset xy = x.united(Itemset(ys));
    CHECK(support(x, db) >= support(xy, db));

    if (x.empty() || ys.empty()) continue;
    const AssociationRule rule(x, Itemset(ys));
    const auto m = evaluate(rule, db);
    CHECK(m.support >= 0.0);
    CHECK(m.support <= 1.0);
    CHECK(m.confidence <= 1.0);
    CHECK(m.lift >= 0.0);
    CHECK(m.confidence >= m.support);
    const double via_conf = m.confidence / support(rule.consequent, db);
    CHECK(std::abs(m.lift - via_conf) <= 1e-12 * m.lift);
    CHECK(evaluate(AssociationRule(rule.consequent, rule.antecedent), db).lift == m.lift);
    CHECK(x.valid_in(u));
  }
}
