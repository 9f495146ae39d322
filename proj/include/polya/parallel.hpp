/*
   Copyright 2026 The polya-cert authors

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

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace polya {

// Worker count: POLYA_CERT_THREADS when set to a positive integer, otherwise
// hardware concurrency. Always >= 1.
int thread_cap();

// Calls fn(i) for every i in [0, count), possibly from several threads.
// Callers must make fn(i) write only to slot i of pre-sized storage; results
// are then independent of scheduling and of the thread count, which is what
// keeps reports byte-identical across POLYA_CERT_THREADS settings.
// The first exception thrown by fn is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const int threads = thread_cap();
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_workers =
      std::min(static_cast<std::size_t>(threads), count);
  pool.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace polya
