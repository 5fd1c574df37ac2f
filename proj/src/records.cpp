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

#include "engage/records.hpp"

namespace engage {

std::vector<std::string> EventSequence::tokens() const {
  std::vector<std::string> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.type);
  return out;
}

std::optional<EngagementLevel> parse_level(std::string_view s) {
  if (s == "L") return EngagementLevel::kLow;
  if (s == "M") return EngagementLevel::kMedium;
  if (s == "H") return EngagementLevel::kHigh;
  return std::nullopt;
}

}  // namespace engage
