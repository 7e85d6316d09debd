#include "hiddensums/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hiddensums {

int configured_thread_count() {
  if (const char* env = std::getenv("HIDDENSUMS_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return std::min(n, 256);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_ranges(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  const int workers = std::min<std::uint64_t>(configured_thread_count(), std::max<std::uint64_t>(total, 1));
  if (workers <= 1 || total < 1024) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = chunk * w;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hiddensums
