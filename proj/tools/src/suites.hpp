#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace nikishin::cli {

struct Check {
  std::string suite, name;
  double value = 0, threshold = 0;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();
// Runs one suite ("all" runs every suite in order).
std::vector<Check> run_suite(const std::string& suite, const RunConfig& cfg);
Json checks_to_json(const std::vector<Check>& checks);

// Runs f(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(int count, int threads, F&& f);

}  // namespace nikishin::cli

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace nikishin::cli {

template <class F>
void parallel_for(int count, int threads, F&& f) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex m;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(m);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace nikishin::cli
