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
#include <string>
#include <vector>

#include "engage/records.hpp"

namespace engage {

// An order-preserving (not necessarily contiguous) subsequence pattern and
// the fraction of sequences containing it.
struct SequencePattern {
  std::vector<std::string> elements;
  std::uint64_t count = 0;
  double support = 0.0;

  friend bool operator==(const SequencePattern&, const SequencePattern&) = default;
};

// Groups events per student, ordered by event_date with input order kept on
// ties. Output is sorted by student id.
std::vector<EventSequence> build_sequences(const std::vector<EventRecord>& events);

bool contains_subsequence(const std::vector<std::string>& sequence,
                          const std::vector<std::string>& pattern);

// Level-wise GSP: frequent tokens, then length-k candidates from joining
// length-(k-1) patterns whose tails and heads overlap, pruned by
// (k-1)-subsequence frequency and counted by subsequence scans. Stops when
// a level is empty or max_len is reached. Output is sorted by length, then
// lexicographically.
std::vector<SequencePattern> gsp_mine(const std::vector<std::vector<std::string>>& sequences,
                                      double min_support, std::size_t max_len = 4);

std::vector<SequencePattern> gsp_mine(const std::vector<EventSequence>& sequences,
                                      double min_support, std::size_t max_len = 4);

std::string pattern_label(const SequencePattern& p);

}  // namespace engage
