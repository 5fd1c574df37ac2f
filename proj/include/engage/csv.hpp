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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace engage::csv {

// Splits one comma-delimited line. Double-quoted fields may contain commas
// and doubled quotes. A trailing '\r' is ignored.
std::vector<std::string> split(std::string_view line);

// Quotes a field when it holds a comma, quote or newline.
std::string escape(std::string_view field);

std::string join(const std::vector<std::string>& fields);

// Line reader that tracks 1-based line numbers and skips blank lines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& fields);
  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::string buffer_;
};

}  // namespace engage::csv
