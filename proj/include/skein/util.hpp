#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace skein {

// Runs fn(i) for i in [0, total) across `jobs` threads. Work items must
// write only to their own slot of any shared output; results are therefore
// identical for any job count.
inline void parallel_for(int total, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || total <= 1) {
    for (int i = 0; i < total; ++i) fn(i);
    return;
  }
  jobs = std::min(jobs, total);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  for (int t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (int i = t; i < total; i += jobs) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace skein
