#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace cpd::cli {

// Runs fn(i) for i in [0,n) on a bounded pool. Items are independent;
// scheduling never affects results because every item derives its own seed.
// Returns one error string per item (empty on success).
inline std::vector<std::string> run_parallel(
    std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  std::vector<std::string> errors(n);
  if (n == 0) return errors;

  const int pool = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      } catch (...) {
        errors[i] = "unknown error";
      }
    }
  };

  if (pool == 1) {
    worker();
    return errors;
  }
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return errors;
}

}  // namespace cpd::cli
