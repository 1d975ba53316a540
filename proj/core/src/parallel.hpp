// Copyright 2026 The wml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef WML_SRC_PARALLEL_HPP_
#define WML_SRC_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wml::internal {

inline int worker_count(int requested, std::size_t work) {
  int t = requested > 0 ? requested
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return static_cast<int>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Calls f(worker, begin, end) on contiguous blocks of [0, n). The first
// exception thrown by any worker is rethrown after all have joined.
template <class F>
void parallel_blocks(std::size_t n, int threads, F f) {
  const int w = worker_count(threads, n);
  if (w <= 1) {
    f(0, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) {
    const std::size_t b = n * k / w, e = n * (k + 1) / w;
    pool.emplace_back([&, k, b, e] {
      try {
        f(k, b, e);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace wml::internal

#endif  // WML_SRC_PARALLEL_HPP_
