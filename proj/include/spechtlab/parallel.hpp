/*
   Copyright 2026 The spechtlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace spechtlab {

// Worker count for the parallel kernels: SPECHTLAB_THREADS if set to a
// positive integer, otherwise the hardware concurrency. Results never depend
// on this value; only the schedule does.
inline int thread_count() {
  if (const char* env = std::getenv("SPECHTLAB_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Calls body(begin, end, worker) on disjoint chunks of [0, count). Runs inline
// when one worker suffices.
template <class Body>
void parallel_chunks(std::size_t count, Body&& body, std::size_t min_chunk = 64) {
  const auto workers = static_cast<std::size_t>(
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count / min_chunk)));
  if (workers <= 1) {
    body(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * step;
    const std::size_t e = std::min(count, b + step);
    if (b >= e) break;
    pool.emplace_back([&body, &errors, b, e, w] {
      try {
        body(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

inline std::size_t chunk_workers(std::size_t count, std::size_t min_chunk = 64) {
  return std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count / min_chunk));
}

}  // namespace spechtlab
