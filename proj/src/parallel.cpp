#include "silverline/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace silverline {

int thread_count() {
  if (const char* env = std::getenv("SILVERLINE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_chunk(long long chunks, int threads, const std::function<void(long long)>& body) {
  if (chunks <= 0) return;
  const long long workers = std::min<long long>(std::max(1, threads), chunks);
  if (workers == 1) {
    for (long long c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (long long c = next++; c < chunks; c = next++) {
      try {
        body(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
      }
    }
  };
  std::vector<std::thread> pool;
  for (long long i = 0; i < workers; ++i) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace silverline
