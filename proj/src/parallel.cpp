#include "simcount/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace simcount {

std::size_t parallel_range_count(std::size_t total, int workers) {
  if (total == 0) return 0;
  const std::size_t w = workers < 1 ? 1 : static_cast<std::size_t>(workers);
  return std::min(total, w);
}

void parallel_ranges(std::size_t total, int workers,
                     const std::function<void(std::size_t, std::size_t,
                                              std::size_t)>& fn) {
  const std::size_t nr = parallel_range_count(total, workers);
  if (nr == 0) return;
  if (nr == 1) {
    fn(0, 0, total);
    return;
  }
  const std::size_t base = total / nr;
  const std::size_t extra = total % nr;
  std::vector<std::exception_ptr> errors(nr);
  std::vector<std::thread> threads;
  threads.reserve(nr);
  std::size_t begin = 0;
  for (std::size_t r = 0; r < nr; ++r) {
    const std::size_t end = begin + base + (r < extra ? 1 : 0);
    threads.emplace_back([&, r, begin, end] {
      try {
        fn(r, begin, end);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace simcount
