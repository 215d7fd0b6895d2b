#pragma once

// Exact-rational phase-1 simplex (Bland's rule) for desk-scale feasibility of
// the tile LP, plus extraction of Farkas certificates in the dual layout.

#include "f2tile/farkas.hpp"
#include "f2tile/gf2.hpp"

#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <vector>

namespace f2tile {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Equality system A y = b over y >= 0, exact rationals.
struct RationalSystem {
  RatMatrix A;
  RatVector b;
};

struct SimplexOptions {
  int maxRows = 20000;
  int maxCols = 20000;
};

struct SimplexResult {
  bool feasible = false;
  RatVector point;  // y with Ay = b, y >= 0 (feasible case)
  RatVector dual;   // z with A^T z >= 0, b^T z < 0 (infeasible case)
  std::uint64_t pivots = 0;
};

// Phase-1 auxiliary problem solved with Bland's rule; deterministic, cannot
// cycle.  The returned alternative is internally re-verified exactly.
SimplexResult solve_phase1(const RationalSystem& sys, const SimplexOptions& opts = {});

// The primal feasibility system with the spectrum-side variables eliminated
// through the transform rows (the equality-relaxation form): variables
// f(x) >= 0 for all x, rows
//   f(0) = |A|;  f(x) = 0 for x in (V+V)\{0};
//   sum_x f(x) = |A|^2;  sum_x (-1)^{x.xh} f(x) = 0 for xh with spectrum != 0.
// Infeasibility duals of this system are exactly the certificates the
// verifier accepts under the identity convention.
struct ReducedRowMeta {
  bool spectrumSide = false;  // true: row indexed by xh; false: f(x) row
  Word index = 0;
};

struct ReducedSystem {
  RationalSystem sys;
  std::vector<ReducedRowMeta> meta;
  int n = 0;
  std::int64_t complementSize = 0;
};

ReducedSystem reduced_feasibility_system(const Region& V);

// Maps an infeasibility dual of the reduced system back onto the certificate
// text layout (upper = spectrum side, lower = point side).
Certificate to_dual_certificate(const RatVector& z, const ReducedSystem& origin);

}  // namespace f2tile
