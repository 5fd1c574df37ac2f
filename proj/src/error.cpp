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

#include "engage/error.hpp"

namespace engage {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyDatabase: return "undefined-on-empty-database";
    case ErrorKind::kZeroAntecedentSupport: return "zero-antecedent-support";
    case ErrorKind::kZeroMarginalSupport: return "zero-marginal-support";
    case ErrorKind::kTooSmallItemset: return "too-small-itemset";
    case ErrorKind::kMalformedLevel: return "malformed-level";
    case ErrorKind::kInvalidThreshold: return "invalid-threshold";
    case ErrorKind::kInvalidItem: return "invalid-item";
    case ErrorKind::kRecursionDepth: return "recursion-depth";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kDuplicateKey: return "duplicate-key";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kInsufficientData: return "insufficient-data";
    case ErrorKind::kLevelMapping: return "level-mapping";
    case ErrorKind::kOracleSize: return "oracle-size";
    case ErrorKind::kInvalidSpec: return "invalid-spec";
    case ErrorKind::kMissingInput: return "missing-input";
  }
  return "unknown";
}

}  // namespace engage
