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

#include <string>
#include <vector>

#include "engage/itemset.hpp"
#include "engage/random.hpp"

namespace engage::testing {

// Each string is one transaction of single-letter presence items: "ab" is
// {a=1, b=1}. `declared` adds items to the universe without using them.
inline TransactionDb letters(const std::vector<std::string>& transactions,
                             const std::string& declared = "") {
  std::vector<std::vector<Item>> records;
  for (const auto& t : transactions) {
    std::vector<Item> r;
    for (char c : t) r.push_back({std::string(1, c), "1"});
    records.push_back(std::move(r));
  }
  std::vector<Item> extra;
  for (char c : declared) extra.push_back({std::string(1, c), "1"});
  return TransactionDb::from_items(records, extra);
}

inline Itemset set_of(const TransactionDb& db, const std::string& letters) {
  std::vector<ItemId> ids;
  for (char c : letters) ids.push_back(db.universe().id({std::string(1, c), "1"}));
  return Itemset(std::move(ids));
}

// Random database: up to max_attributes attributes with 1-3 values each (at
// most 20 items overall), 1..max_transactions records, each attribute
// absent with probability 0.3.
inline TransactionDb random_db(Rng& rng, std::size_t max_attributes = 8,
                               std::size_t max_transactions = 30) {
  const auto n_attr = rng.uniform_int(1, max_attributes);
  std::vector<std::size_t> domain;
  std::size_t items = 0;
  for (std::size_t a = 0; a < n_attr; ++a) {
    auto d = static_cast<std::size_t>(rng.uniform_int(1, 3));
    if (items + d > 20) d = 20 - items;
    if (d == 0) break;
    domain.push_back(d);
    items += d;
  }
  const auto m = rng.uniform_int(1, max_transactions);
  std::vector<std::vector<Item>> records;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Item> r;
    for (std::size_t a = 0; a < domain.size(); ++a) {
      if (rng.bernoulli(0.3)) continue;
      r.push_back({"attr" + std::to_string(a), std::to_string(rng.uniform_int(0, domain[a] - 1))});
    }
    records.push_back(std::move(r));
  }
  return TransactionDb::from_items(records);
}

// Random sequences over the first `alphabet` letters.
inline std::vector<std::vector<std::string>> random_sequences(Rng& rng, std::size_t alphabet = 6,
                                                              std::size_t max_sequences = 15,
                                                              std::size_t max_len = 6) {
  const auto a = rng.uniform_int(1, alphabet);
  const auto n = rng.uniform_int(1, max_sequences);
  std::vector<std::vector<std::string>> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> seq;
    const auto len = rng.uniform_int(1, max_len);
    for (std::size_t i = 0; i < len; ++i) seq.emplace_back(1, static_cast<char>('a' + rng.uniform_int(0, a - 1)));
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace engage::testing
