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
#include <utility>
#include <vector>

#include "engage/itemset.hpp"

namespace engage {

// Prefix tree over transactions projected onto frequent items, each sorted
// by the frequent-item order F. Node 0 is the item-less root.
class FPTree {
 public:
  static constexpr std::int32_t kNoParent = -1;

  struct Node {
    ItemId item = 0;
    std::uint64_t count = 0;
    std::int32_t parent = kNoParent;
    std::vector<std::int32_t> children;
  };

  // One header row per frequent item, rows in F order.
  struct HeaderEntry {
    ItemId item = 0;
    std::uint64_t count = 0;
    std::vector<std::int32_t> chain;
  };

  using WeightedPath = std::pair<std::vector<ItemId>, std::uint64_t>;

  // Builds from paths whose items are already filtered to `order` and
  // sorted by it.
  FPTree(std::vector<ItemId> order, const std::vector<WeightedPath>& paths,
         std::uint64_t total, std::uint64_t min_count);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<HeaderEntry>& header() const { return header_; }
  // Frequent items, support descending (ties by canonical item order).
  std::vector<ItemId> order() const;
  std::uint64_t total() const { return total_; }
  std::uint64_t min_count() const { return min_count_; }
  bool bare() const { return nodes_.size() == 1; }
  bool single_path() const;

  // Sum of counts along an item's header chain.
  std::uint64_t chain_count(std::size_t header_row) const;
  // Items from the root down to node (exclusive of the root).
  std::vector<ItemId> path_to(std::int32_t node) const;

 private:
  std::vector<Node> nodes_;
  std::vector<HeaderEntry> header_;
  std::uint64_t total_ = 0;
  std::uint64_t min_count_ = 0;
};

// Two scans: item counts fix F, then each transaction's frequent items are
// inserted in F order.
FPTree build_fp_tree(const TransactionDb& db, double min_support);

// Pattern growth over conditional trees, least-frequent header item first.
// Output is sorted canonically. max_len = 0 means no cap. Throws
// kRecursionDepth past 64 levels.
std::vector<FrequentItemset> fp_growth(const FPTree& tree, double min_support,
                                       std::size_t max_len = 0);

}  // namespace engage
