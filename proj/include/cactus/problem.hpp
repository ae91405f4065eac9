#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cactus/graph.hpp"

namespace cactus {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weight bounds [lower, upper] per cluster and the required cluster count.
struct ProblemParams {
  Weight lower = 0;
  Weight upper = 0;
  std::int32_t clusters = 1;

  Weight slack() const { return upper - lower; }

  void validate() const {
    if (lower < 0) throw InvalidParams("lower bound must be non-negative");
    if (lower > upper) throw InvalidParams("lower bound " + std::to_string(lower) + " exceeds upper bound " + std::to_string(upper));
    if (clusters < 1) throw InvalidParams("cluster count must be positive");
  }
};

enum class Algorithm { kTupleSet, kInterval };

enum class CountObjective { kMin, kMax };

enum class Status { kFeasible, kInfeasible, kTriviallyInfeasible };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::kFeasible: return "feasible";
    case Status::kInfeasible: return "infeasible";
    case Status::kTriviallyInfeasible: return "trivially_infeasible";
  }
  return "unknown";
}

/// Cases excluded before any DP runs: a vertex heavier than the upper bound
/// or more clusters than vertices.
inline bool trivially_infeasible(const CactusGraph& g, const ProblemParams& params) {
  return g.max_weight() > params.upper || static_cast<std::size_t>(params.clusters) > g.num_vertices();
}

/// Raised when backtracking cannot follow a recorded witness.
class WitnessNotFound : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a runtime-checked structural bound of the DP is violated.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cactus
