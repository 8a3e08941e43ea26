#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hanoi {

/// Worker count for full-scan operations. Results never depend on it.
struct Parallelism {
  unsigned workers = 1;

  // 0 means "use the hardware concurrency".
  unsigned resolved() const {
    if (workers != 0) return workers;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

namespace detail {

/// Splits [begin, end) into one contiguous chunk per worker and runs
/// body(chunk_begin, chunk_end, worker_index). The first exception thrown
/// by any worker is rethrown on the caller's thread.
template <class Index, class Body>
void parallel_chunks(Parallelism par, Index begin, Index end, Body&& body) {
  const Index total = end > begin ? end - begin : 0;
  const auto workers = static_cast<Index>(std::min<std::uint64_t>(par.resolved(), std::max<Index>(total, 1)));
  if (workers <= 1) {
    body(begin, end, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (Index w = 0; w < workers; ++w) {
    const Index lo = begin + total * w / workers;
    const Index hi = begin + total * (w + 1) / workers;
    threads.emplace_back([&, lo, hi, w] {
      try {
        body(lo, hi, static_cast<unsigned>(w));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

}  // namespace hanoi
