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

#include "engage/fpgrowth.hpp"

#include <algorithm>
#include <map>

#include "engage/error.hpp"

namespace engage {

namespace {

constexpr std::size_t kMaxDepth = 64;

}  // namespace

FPTree::FPTree(std::vector<ItemId> order, const std::vector<WeightedPath>& paths,
               std::uint64_t total, std::uint64_t min_count)
    : total_(total), min_count_(min_count) {
  nodes_.push_back(Node{});
  std::map<ItemId, std::size_t> row_of;
  for (ItemId item : order) {
    row_of.emplace(item, header_.size());
    header_.push_back(HeaderEntry{item, 0, {}});
  }

  for (const auto& [items, weight] : paths) {
    std::int32_t cur = 0;
    for (ItemId item : items) {
      std::int32_t next = kNoParent;
      for (std::int32_t child : nodes_[cur].children) {
        if (nodes_[child].item == item) {
          next = child;
          break;
        }
      }
      if (next == kNoParent) {
        next = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(Node{item, 0, cur, {}});
        nodes_[cur].children.push_back(next);
        header_.at(row_of.at(item)).chain.push_back(next);
      }
      nodes_[next].count += weight;
      cur = next;
    }
  }
  for (auto& row : header_) {
    for (std::int32_t n : row.chain) row.count += nodes_[n].count;
  }
}

std::vector<ItemId> FPTree::order() const {
  std::vector<ItemId> out;
  out.reserve(header_.size());
  for (const auto& row : header_) out.push_back(row.item);
  return out;
}

bool FPTree::single_path() const {
  return std::all_of(nodes_.begin(), nodes_.end(),
                     [](const Node& n) { return n.children.size() <= 1; });
}

std::uint64_t FPTree::chain_count(std::size_t header_row) const {
  std::uint64_t sum = 0;
  for (std::int32_t n : header_.at(header_row).chain) sum += nodes_[n].count;
  return sum;
}

std::vector<ItemId> FPTree::path_to(std::int32_t node) const {
  std::vector<ItemId> out;
  for (std::int32_t cur = node; cur > 0; cur = nodes_[cur].parent) out.push_back(nodes_[cur].item);
  std::reverse(out.begin(), out.end());
  return out;
}

FPTree build_fp_tree(const TransactionDb& db, double min_support) {
  if (db.empty()) throw Error(ErrorKind::kEmptyDatabase, "cannot build an FP-tree from an empty database");
  const std::uint64_t threshold = min_count(min_support, db.size());

  const auto counts = db.item_counts();
  std::vector<ItemId> order;
  for (ItemId id = 0; id < counts.size(); ++id) {
    if (counts[id] >= threshold) order.push_back(id);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](ItemId a, ItemId b) { return counts[a] > counts[b]; });
  std::vector<std::size_t> rank(counts.size(), SIZE_MAX);
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::vector<FPTree::WeightedPath> paths;
  paths.reserve(db.size());
  for (const auto& t : db.transactions()) {
    std::vector<ItemId> items;
    for (ItemId id : t) {
      if (rank[id] != SIZE_MAX) items.push_back(id);
    }
    std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) { return rank[a] < rank[b]; });
    paths.emplace_back(std::move(items), 1);
  }
  return FPTree(std::move(order), paths, db.size(), threshold);
}

namespace {

class Miner {
 public:
  Miner(std::uint64_t total, std::uint64_t threshold, std::size_t max_len)
      : total_(static_cast<double>(total)), threshold_(threshold), max_len_(max_len) {}

  void mine(const FPTree& tree, std::vector<ItemId>& prefix, std::size_t depth) {
    if (depth > kMaxDepth) {
      throw Error(ErrorKind::kRecursionDepth, "FP-growth recursion exceeded 64 levels");
    }
    if (tree.bare() || at_cap(prefix)) return;
    if (tree.single_path()) {
      mine_single_path(tree, prefix);
      return;
    }

    const auto& header = tree.header();
    for (std::size_t row = header.size(); row-- > 0;) {
      const auto& entry = header[row];
      if (entry.count < threshold_) continue;
      prefix.push_back(entry.item);
      emit(prefix, entry.count);

      if (!at_cap(prefix)) {
        // Conditional pattern base: prefix paths above each chain node.
        std::vector<FPTree::WeightedPath> base;
        std::map<ItemId, std::uint64_t> cond_counts;
        for (std::int32_t node : entry.chain) {
          const auto& n = tree.nodes()[node];
          auto path = tree.path_to(n.parent);
          if (path.empty()) continue;
          for (ItemId item : path) cond_counts[item] += n.count;
          base.emplace_back(std::move(path), n.count);
        }

        std::vector<ItemId> order;
        for (const auto& [item, c] : cond_counts) {
          if (c >= threshold_) order.push_back(item);
        }
        std::stable_sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
          return cond_counts[a] > cond_counts[b];
        });
        if (!order.empty()) {
          std::map<ItemId, std::size_t> rank;
          for (std::size_t r = 0; r < order.size(); ++r) rank.emplace(order[r], r);
          for (auto& [path, weight] : base) {
            std::erase_if(path, [&](ItemId i) { return !rank.contains(i); });
            std::sort(path.begin(), path.end(),
                      [&](ItemId a, ItemId b) { return rank.at(a) < rank.at(b); });
          }
          FPTree conditional(std::move(order), base, tree.total(), threshold_);
          mine(conditional, prefix, depth + 1);
        }
      }
      prefix.pop_back();
    }
  }

  std::vector<FrequentItemset> take() { return std::move(out_); }

 private:
  bool at_cap(const std::vector<ItemId>& prefix) const {
    return max_len_ != 0 && prefix.size() >= max_len_;
  }

  void emit(const std::vector<ItemId>& items, std::uint64_t count) {
    out_.push_back({Itemset(items), count, static_cast<double>(count) / total_});
  }

  // Every combination of nodes on a single path is frequent with the count of
  // its deepest node.
  void mine_single_path(const FPTree& tree, std::vector<ItemId>& prefix) {
    std::vector<const FPTree::Node*> path;
    for (std::int32_t cur = 0; !tree.nodes()[cur].children.empty();) {
      cur = tree.nodes()[cur].children.front();
      if (tree.nodes()[cur].count < threshold_) break;
      path.push_back(&tree.nodes()[cur]);
    }
    std::vector<ItemId> chosen;
    extend(path, 0, prefix, chosen);
  }

  void extend(const std::vector<const FPTree::Node*>& path, std::size_t from,
              std::vector<ItemId>& prefix, std::vector<ItemId>& chosen) {
    for (std::size_t i = from; i < path.size(); ++i) {
      chosen.push_back(path[i]->item);
      std::vector<ItemId> items = prefix;
      items.insert(items.end(), chosen.begin(), chosen.end());
      emit(items, path[i]->count);
      if (max_len_ == 0 || items.size() < max_len_) extend(path, i + 1, prefix, chosen);
      chosen.pop_back();
    }
  }

  double total_;
  std::uint64_t threshold_;
  std::size_t max_len_;
  std::vector<FrequentItemset> out_;
};

}  // namespace

std::vector<FrequentItemset> fp_growth(const FPTree& tree, double min_support,
                                       std::size_t max_len) {
  const std::uint64_t threshold =
      std::max(tree.min_count(), min_count(min_support, std::max<std::uint64_t>(1, tree.total())));
  Miner miner(std::max<std::uint64_t>(1, tree.total()), threshold, max_len);
  std::vector<ItemId> prefix;
  miner.mine(tree, prefix, 0);
  auto out = miner.take();
  sort_canonical(out);
  return out;
}

}  // namespace engage
