#pragma once

// The packing-or-hitting-set dichotomy for long cycles, its certificates and
// their verifiers.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcep/budget.hpp"
#include "lcep/errors.hpp"
#include "lcep/graph.hpp"
#include "lcep/hubs.hpp"

namespace lcep {

/// ceil(210 k^2 log2 k + 10 ell (k - 1)).
std::int64_t f_bound(int k, int ell);

struct SolveStats {
  int ds = 0;               // largest ds over the frames built
  int hubs = 0;             // largest hub count over the frames built
  int recursion_depth = 0;  // deepest recursive call
};

struct Certificate {
  enum class Type { packing, hitting_set };
  Type type = Type::hitting_set;
  int k = 1;
  int ell = 1;
  std::int64_t bound = 0;
  std::vector<std::vector<EdgeId>> cycles;  // packing, each in cycle order
  std::vector<EdgeId> edges;                // hitting set, ascending
  SolveStats stats;

  bool is_packing() const { return type == Type::packing; }
};

struct SolverConfig {
  DetectorBudget budget;
  /// Defaults to high for graphs with at most 24 vertices, low otherwise.
  std::optional<AssertLevel> assert_level;
  /// Recorded only: every tie-break in the solver is deterministic.
  std::uint64_t seed = 0;
};

AssertLevel effective_assert_level(const SolverConfig& cfg, const MultiGraph& g);

/// One JSON object per frame the solver built, for --dump-structure.
struct SolveTrace {
  std::vector<std::string> frames;
};

/// Either k edge-disjoint cycles of length at least ell, or at most
/// f_bound(k, ell) edges meeting every such cycle. Throws BudgetExceeded when
/// the detector budget runs out and ClaimViolation when an internal
/// guarantee fails.
Certificate solve(const MultiGraph& g, int k, int ell, const SolverConfig& cfg = {},
                  SolveTrace* trace = nullptr);

/// k edge-disjoint long cycles from a long cycle `c` of `gx` that runs
/// through at least two pieces, where each piece links its boundary vertices
/// k times over.
std::vector<Cycle> extract_packing(const MultiGraph& gx, const std::vector<Piece>& pieces,
                                   Cycle c, int k, int ell);

struct Verification {
  bool valid = false;
  std::string diagnostics;
};

Verification verify_packing(const MultiGraph& g, const Certificate& cert);
Verification verify_hitting_set(const MultiGraph& g, const Certificate& cert,
                                const DetectorBudget& budget = {});
Verification verify_certificate(const MultiGraph& g, const Certificate& cert,
                                const DetectorBudget& budget = {});

/// Fields in the order type, k, ell, cycles|edges, f_bound, stats.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(std::string_view text);

}  // namespace lcep
