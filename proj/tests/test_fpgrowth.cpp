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

#include "doctest.h"
#include "engage/apriori.hpp"
#include "engage/error.hpp"
#include "engage/fpgrowth.hpp"
#include "engage/oracle.hpp"
#include "test_support.hpp"

using namespace engage;
using engage::testing::letters;
using engage::testing::set_of;

namespace {

const FPTree::Node* child_with(const FPTree& tree, std::int32_t parent, ItemId item) {
  for (auto c : tree.nodes()[parent].children) {
    if (tree.nodes()[c].item == item) return &tree.nodes()[c];
  }
  return nullptr;
}

}  // namespace

TEST_CASE("fp-tree shares prefixes") {
  auto db = letters({"ab", "ab", "a", "b"});
  const auto tree = build_fp_tree(db, 0.25);
  const ItemId a = set_of(db, "a")[0];
  const ItemId b = set_of(db, "b")[0];

  CHECK(tree.order() == std::vector<ItemId>{a, b});
  CHECK(tree.nodes().size() == 4);
  CHECK(tree.nodes()[0].children.size() == 2);

  const auto* na = child_with(tree, 0, a);
  REQUIRE(na != nullptr);
  CHECK(na->count == 3);
  const auto* nb_root = child_with(tree, 0, b);
  REQUIRE(nb_root != nullptr);
  CHECK(nb_root->count == 1);
  REQUIRE(na->children.size() == 1);
  const auto& nab = tree.nodes()[na->children[0]];
  CHECK(nab.item == b);
  CHECK(nab.count == 2);
  CHECK(tree.path_to(na->children[0]) == std::vector<ItemId>{a, b});
  CHECK_FALSE(tree.single_path());
}

TEST_CASE("fp-tree with no frequent items is bare") {
  auto db = letters({"a", "b", "c"});
  const auto tree = build_fp_tree(db, 0.5);
  CHECK(tree.bare());
  CHECK(tree.header().empty());
  CHECK(fp_growth(tree, 0.5).empty());
}

TEST_CASE("single-path tree enumerates every combination") {
  auto db = letters({"abc", "abc", "ab"});
  const auto tree = build_fp_tree(db, 0.5);
  CHECK(tree.single_path());
  const auto out = fp_growth(tree, 0.5);
  CHECK(out.size() == 7);
  CHECK(out == oracle::brute_force_frequent_itemsets(db, 0.5));
}

TEST_CASE("fp_growth threshold errors") {
  auto db = letters({"a"});
  CHECK_THROWS_AS(build_fp_tree(db, 0.0), Error);
  CHECK_THROWS_AS(build_fp_tree(letters({}), 0.5), Error);
}

TEST_CASE("header chains conserve item counts") {
  Rng rng(21);
  for (int round = 0; round < 100; ++round) {
    const auto db = engage::testing::random_db(rng);
    const double min_support = 0.05 + 0.9 * rng.uniform01();
    const auto tree = build_fp_tree(db, min_support);
    const auto counts = db.item_counts();
    for (std::size_t row = 0; row < tree.header().size(); ++row) {
      const auto& h = tree.header()[row];
      CHECK(tree.chain_count(row) == counts[h.item]);
      CHECK(h.count == counts[h.item]);
      CHECK(h.count >= tree.min_count());
    }
    // Node counts never exceed their parent's.
    for (std::size_t i = 1; i < tree.nodes().size(); ++i) {
      const auto& n = tree.nodes()[i];
      if (n.parent > 0) CHECK(n.count <= tree.nodes()[n.parent].count);
    }
  }
}

TEST_CASE("fp_growth equals apriori and the oracle") {
  Rng rng(31);
  for (int round = 0; round < 150; ++round) {
    const auto db = engage::testing::random_db(rng);
    const double min_support = 0.05 + 0.9 * rng.uniform01();
    const auto fp = fp_growth(build_fp_tree(db, min_support), min_support);
    CHECK(fp == frequent_itemsets_apriori(db, min_support).flatten());
    CHECK(fp == oracle::brute_force_frequent_itemsets(db, min_support));

    const std::size_t cap = static_cast<std::size_t>(rng.uniform_int(1, 3));
    CHECK(fp_growth(build_fp_tree(db, min_support), min_support, cap) ==
          frequent_itemsets_apriori(db, min_support, cap).flatten());
  }
}
