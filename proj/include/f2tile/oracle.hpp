#pragma once

// Ground truth at small scale: exhaustive backtracking search for a tiling
// complement, full-rank classification, downward-closed region enumeration,
// and cross-validation of the projection and LP criteria.

#include "f2tile/gf2.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace f2tile {

enum class SearchStatus { Found, Exhausted, Capped };

struct ComplementResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Region> complement;  // set iff status == Found
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
  // Exhausted is a proof of non-tiling; Capped is not.
  bool proven_non_tile() const { return status == SearchStatus::Exhausted; }
};

struct OracleOptions {
  std::uint64_t nodeCap = 0;  // 0 = unlimited
};

// Depth-first exact-cover search for a complement of V, confined to <V> and
// extended by a linear complement of the span.  Branches on the least
// uncovered point.  Exhaustive (status Exhausted) when no cap is hit.
ComplementResult find_complement(const Region& V, const OracleOptions& opts = {});

enum class RankClass { FullRank, VProperOnly, Neither };

// Requires is_tile_pair(V, A).
RankClass classify_full_rank(const Region& V, const Region& A);

// All downward-closed (under >=_R) regions of the given size in F_2^n,
// deterministically ordered.
std::vector<Region> downward_closed_regions(int n, int size);

struct ConsistencyReport {
  ComplementResult oracle;
  bool binpackAllFeasible = true;     // over every tail projection r=1..n-1
  int firstInfeasibleR = -1;
  bool lpFeasible = false;            // exact phase-1 on the reduced system
  bool certificateValid = false;      // only meaningful when !lpFeasible
  bool consistent = false;
};

// Runs the oracle, the projection criterion for every r, and the exact LP
// pipeline, and checks the soundness relations between them.
ConsistencyReport cross_validate(const Region& V, const OracleOptions& opts = {});

}  // namespace f2tile
