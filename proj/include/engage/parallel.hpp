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

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace engage {

// Worker cap: ENGAGE_MINER_THREADS if set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t worker_count();

// Splits [0, n) into contiguous chunks and calls fn(begin, end, chunk_index)
// for each, one chunk per worker. Ranges smaller than min_chunk per worker run
// inline. Returns the number of chunks used so callers can size per-chunk
// accumulators with chunk_count(n, min_chunk) beforehand.
std::size_t chunk_count(std::size_t n, std::size_t min_chunk);

template <class Fn>
void parallel_chunks(std::size_t n, std::size_t min_chunk, Fn&& fn) {
  const std::size_t chunks = chunk_count(n, min_chunk);
  if (chunks <= 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  const std::size_t step = (n + chunks - 1) / chunks;
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = c * step;
      const std::size_t end = std::min(n, begin + step);
      workers.emplace_back([&, begin, end, c] {
        try {
          fn(begin, end, c);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace engage
