#pragma once

#include <chrono>
#include <cstdint>

#include "lcep/errors.hpp"

namespace lcep {

/// Search limits. Zero means unlimited for either field.
struct DetectorBudget {
  std::uint64_t max_nodes_expanded = 0;
  std::int64_t time_limit_ms = 0;
};

/// Running tally against a DetectorBudget. One meter may be shared by every
/// search performed on behalf of a single top-level request.
class BudgetMeter {
 public:
  explicit BudgetMeter(const DetectorBudget& budget = {})
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void charge(std::uint64_t nodes = 1) {
    nodes_ += nodes;
    if (budget_.max_nodes_expanded != 0 && nodes_ > budget_.max_nodes_expanded) {
      throw BudgetExceeded("node budget of " + std::to_string(budget_.max_nodes_expanded) +
                           " exceeded");
    }
    if (budget_.time_limit_ms != 0 && (nodes_ & 0x3ff) == 0) check_time();
  }

  void check_time() const {
    if (budget_.time_limit_ms == 0) return;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    if (elapsed > budget_.time_limit_ms) {
      throw BudgetExceeded("time budget of " + std::to_string(budget_.time_limit_ms) +
                           " ms exceeded");
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  DetectorBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace lcep
