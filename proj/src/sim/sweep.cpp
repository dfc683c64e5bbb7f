#include "mihx/sim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

namespace mihx::sim {

std::vector<MetricsRecord> collect_sweep(std::span<const Scenario> scenarios, unsigned threads) {
  if (scenarios.empty()) throw ConfigInvalid("scenarios", "scenario list is empty");

  std::vector<FieldError> errors;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    for (auto& e : scenarios[i].check()) {
      errors.push_back({"scenario[" + std::to_string(i) + "]." + e.field, e.message});
    }
  }
  if (!errors.empty()) throw ConfigInvalid(std::move(errors));

  std::vector<MetricsRecord> rows(scenarios.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(scenarios.size()));

  if (threads <= 1) {
    for (std::size_t i = 0; i < scenarios.size(); ++i) rows[i] = run_scenario(scenarios[i]).metrics;
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < scenarios.size();) {
          rows[i] = run_scenario(scenarios[i]).metrics;
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

}  // namespace mihx::sim
