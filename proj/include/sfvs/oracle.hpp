#pragma once

#include <cstdint>
#include <span>

#include "sfvs/graph.hpp"

namespace sfvs {

struct OracleResult {
  bool timed_out = false;   // budget hit; solution is the best found so far
  Solution solution;
  std::uint64_t explored = 0;  // search nodes visited
};

inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

// Exact maximum-weight S-forest by include/exclude branch and bound. On
// chordal inputs vertices are branched in PEO order and feasibility is the
// incremental S-triangle test; otherwise each inclusion runs is_s_forest.
OracleResult brute_force_sfvs(const Instance& inst,
                              std::uint64_t budget = kDefaultOracleBudget);

struct Verification {
  bool feasible = false;
  Weight removed_weight = 0;
};

// Throws InvalidInput if removed names an unknown vertex.
Verification verify_sfvs(const Instance& inst, std::span<const Vertex> removed);

}  // namespace sfvs
