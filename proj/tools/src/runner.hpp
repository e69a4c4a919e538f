#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "radon/suites/suites.hpp"

namespace radon::suites::detail {

/// One case: its identity and parameters are fixed up front so a throwing case
/// still yields a (failed) row.
struct Task {
  std::string identity;
  nlohmann::json params;
  std::function<void(Row&)> body;
};

/// Independent stream per case, so results do not depend on scheduling.
inline std::mt19937_64 case_rng(std::uint64_t seed, const std::string& tag, std::vector<int> ints) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : tag) h = (h ^ c) * 1099511628211ull;
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                   static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  for (int v : ints) words.push_back(static_cast<std::uint32_t>(v));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

inline std::vector<Row> run_tasks(const std::vector<Task>& tasks, int threads) {
  std::vector<Row> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      Row& row = rows[i];
      row.identity = tasks[i].identity;
      row.params = tasks[i].params;
      try {
        tasks[i].body(row);
      } catch (const std::exception& e) {
        row.pass = false;
        row.detail = std::string("error: ") + e.what();
      }
    }
  };
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::vector<Row> run_tasks(std::vector<Task> tasks, const RunConfig& cfg) {
  if (!cfg.only.empty())
    std::erase_if(tasks, [&](const Task& t) {
      return std::find(cfg.only.begin(), cfg.only.end(), t.identity) == cfg.only.end();
    });
  return run_tasks(tasks, cfg.threads);
}

}  // namespace radon::suites::detail
