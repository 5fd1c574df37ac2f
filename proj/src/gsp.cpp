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

#include "engage/gsp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "engage/error.hpp"
#include "engage/itemset.hpp"
#include "engage/parallel.hpp"

namespace engage {

std::vector<EventSequence> build_sequences(const std::vector<EventRecord>& events) {
  std::vector<std::size_t> order(events.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (events[a].student_id != events[b].student_id) return events[a].student_id < events[b].student_id;
    return events[a].event_date < events[b].event_date;
  });

  std::vector<EventSequence> out;
  for (std::size_t i : order) {
    const auto& e = events[i];
    if (out.empty() || out.back().student_id != e.student_id) out.push_back({e.student_id, {}});
    out.back().events.push_back({e.event_date, e.event_type});
  }
  return out;
}

bool contains_subsequence(const std::vector<std::string>& sequence,
                          const std::vector<std::string>& pattern) {
  std::size_t p = 0;
  for (std::size_t i = 0; i < sequence.size() && p < pattern.size(); ++i) {
    if (sequence[i] == pattern[p]) ++p;
  }
  return p == pattern.size();
}

namespace {

using Token = std::uint16_t;
using Pattern = std::vector<Token>;

// next[i * alphabet + t] = first position >= i holding token t, or len.
struct SequenceIndex {
  std::size_t len = 0;
  std::vector<std::uint32_t> next;

  SequenceIndex(const std::vector<Token>& seq, std::size_t alphabet) : len(seq.size()) {
    next.assign((len + 1) * alphabet, static_cast<std::uint32_t>(len));
    for (std::size_t i = len; i-- > 0;) {
      std::copy_n(next.begin() + static_cast<std::ptrdiff_t>((i + 1) * alphabet), alphabet,
                  next.begin() + static_cast<std::ptrdiff_t>(i * alphabet));
      next[i * alphabet + seq[i]] = static_cast<std::uint32_t>(i);
    }
  }

  bool contains(const Pattern& p, std::size_t alphabet) const {
    std::size_t pos = 0;
    for (Token t : p) {
      if (pos >= len) return false;
      const std::size_t at = next[pos * alphabet + t];
      if (at >= len) return false;
      pos = at + 1;
    }
    return true;
  }
};

std::vector<Pattern> join_candidates(const std::vector<Pattern>& level) {
  const std::set<Pattern> known(level.begin(), level.end());
  std::map<Pattern, std::vector<const Pattern*>> by_head;
  for (const auto& q : level) by_head[Pattern(q.begin(), q.end() - 1)].push_back(&q);

  std::set<Pattern> out;
  for (const auto& p : level) {
    auto it = by_head.find(Pattern(p.begin() + 1, p.end()));
    if (it == by_head.end()) continue;
    for (const Pattern* q : it->second) {
      Pattern candidate = p;
      candidate.push_back(q->back());
      bool all_frequent = true;
      for (std::size_t drop = 0; drop < candidate.size() && all_frequent; ++drop) {
        Pattern sub;
        sub.reserve(candidate.size() - 1);
        for (std::size_t i = 0; i < candidate.size(); ++i) {
          if (i != drop) sub.push_back(candidate[i]);
        }
        all_frequent = known.contains(sub);
      }
      if (all_frequent) out.insert(std::move(candidate));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<SequencePattern> gsp_mine(const std::vector<std::vector<std::string>>& sequences,
                                      double min_support, std::size_t max_len) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorKind::kInvalidThreshold, "min_support must lie in (0, 1]");
  }
  if (max_len == 0) throw Error(ErrorKind::kInvalidThreshold, "max_len must be at least 1");
  if (sequences.empty()) return {};

  std::set<std::string> vocabulary;
  for (const auto& s : sequences) vocabulary.insert(s.begin(), s.end());
  if (vocabulary.size() > 65535) throw Error(ErrorKind::kInvalidSpec, "too many distinct event types");
  const std::vector<std::string> tokens(vocabulary.begin(), vocabulary.end());
  const std::size_t alphabet = std::max<std::size_t>(1, tokens.size());
  std::map<std::string, Token> token_id;
  for (std::size_t i = 0; i < tokens.size(); ++i) token_id.emplace(tokens[i], static_cast<Token>(i));

  std::vector<SequenceIndex> index;
  index.reserve(sequences.size());
  for (const auto& s : sequences) {
    std::vector<Token> encoded;
    encoded.reserve(s.size());
    for (const auto& t : s) encoded.push_back(token_id.at(t));
    index.emplace_back(encoded, alphabet);
  }

  const std::uint64_t threshold = min_count(min_support, sequences.size());
  const double n = static_cast<double>(sequences.size());
  std::vector<SequencePattern> out;
  auto emit = [&](const Pattern& p, std::uint64_t c) {
    SequencePattern sp;
    for (Token t : p) sp.elements.push_back(tokens[t]);
    sp.count = c;
    sp.support = static_cast<double>(c) / n;
    out.push_back(std::move(sp));
  };

  std::vector<Pattern> candidates;
  for (std::size_t t = 0; t < tokens.size(); ++t) candidates.push_back({static_cast<Token>(t)});

  for (std::size_t k = 1; k <= max_len && !candidates.empty(); ++k) {
    const std::size_t chunks = chunk_count(index.size(), 32);
    std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(candidates.size(), 0));
    parallel_chunks(index.size(), 32, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
      for (std::size_t s = begin; s < end; ++s) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          if (index[s].contains(candidates[c], alphabet)) ++partial[chunk][c];
        }
      }
    });

    std::vector<Pattern> frequent;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::uint64_t count = 0;
      for (const auto& p : partial) count += p[c];
      if (count >= threshold) {
        emit(candidates[c], count);
        frequent.push_back(candidates[c]);
      }
    }
    if (k == max_len) break;
    candidates = join_candidates(frequent);
  }
  return out;
}

std::vector<SequencePattern> gsp_mine(const std::vector<EventSequence>& sequences,
                                      double min_support, std::size_t max_len) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(sequences.size());
  for (const auto& s : sequences) tokens.push_back(s.tokens());
  return gsp_mine(tokens, min_support, max_len);
}

std::string pattern_label(const SequencePattern& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (i) out += ", ";
    out += p.elements[i];
  }
  return out + ">";
}

}  // namespace engage
