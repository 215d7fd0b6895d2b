#include "f2tile/exactlp.hpp"

#include <stdexcept>

namespace f2tile {

SimplexResult solve_phase1(const RationalSystem& sys, const SimplexOptions& opts) {
  const Eigen::Index m = sys.A.rows();
  const Eigen::Index k = sys.A.cols();
  if (sys.b.size() != m) throw std::invalid_argument("solve_phase1: shape mismatch");
  if (m > opts.maxRows || k > opts.maxCols)
    throw std::invalid_argument("solve_phase1: system exceeds configured caps");

  // Flip rows so the right-hand side is nonnegative, then minimize the sum of
  // artificial variables.  Tableau layout: columns 0..k-1 structural,
  // k..k+m-1 artificial, last column rhs; row m is the phase-1 objective.
  std::vector<int> sign(m, 1);
  RatMatrix T = RatMatrix::Zero(m + 1, k + m + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    sign[i] = sys.b[i] < 0 ? -1 : 1;
    for (Eigen::Index j = 0; j < k; ++j) T(i, j) = Rational(sign[i]) * sys.A(i, j);
    T(i, k + i) = 1;
    T(i, k + m) = Rational(sign[i]) * sys.b[i];
  }
  // Objective row: reduced costs for basis = artificials.
  for (Eigen::Index j = 0; j < k; ++j) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += T(i, j);
    T(m, j) = -s;
  }
  {
    Rational s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += T(i, k + m);
    T(m, k + m) = -s;
  }

  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = k + i;

  SimplexResult res;
  const Eigen::Index rhs = k + m;
  while (true) {
    // Bland: entering = lowest-index column with negative reduced cost.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < k + m; ++j)
      if (T(m, j) < 0) { enter = j; break; }
    if (enter < 0) break;
    // Ratio test; ties broken by lowest basis variable index (Bland).
    Eigen::Index leave = -1;
    Rational best = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      Rational ratio = T(i, rhs) / T(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("solve_phase1: unbounded auxiliary problem");
    // Pivot.
    Rational piv = T(leave, enter);
    for (Eigen::Index j = 0; j <= rhs; ++j) T(leave, j) /= piv;
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      Rational f = T(i, enter);
      if (f == 0) continue;
      for (Eigen::Index j = 0; j <= rhs; ++j) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
    ++res.pivots;
  }

  const Rational objective = -T(m, rhs);
  if (objective == 0) {
    res.feasible = true;
    res.point = RatVector::Zero(k);
    for (Eigen::Index i = 0; i < m; ++i)
      if (basis[i] < k) res.point[basis[i]] = T(i, rhs);
    // Exact re-verification.
    RatVector resid = sys.A * res.point - sys.b;
    for (Eigen::Index i = 0; i < m; ++i)
      if (resid[i] != 0) throw std::logic_error("solve_phase1: residual nonzero");
    for (Eigen::Index j = 0; j < k; ++j)
      if (res.point[j] < 0) throw std::logic_error("solve_phase1: negative point");
  } else {
    // Dual of the optimal phase-1 basis: pi_i = 1 - (reduced cost of
    // artificial i); the Farkas vector for the original rows is z = -sign*pi.
    res.feasible = false;
    res.dual = RatVector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Rational pi = Rational(1) - T(m, k + i);
      res.dual[i] = -Rational(sign[i]) * pi;
    }
    RatVector atz = sys.A.transpose() * res.dual;
    for (Eigen::Index j = 0; j < k; ++j)
      if (atz[j] < 0) throw std::logic_error("solve_phase1: A^T z has negative entry");
    Rational btz = sys.b.dot(res.dual);
    if (btz >= 0) throw std::logic_error("solve_phase1: b^T z not negative");
  }
  return res;
}

ReducedSystem reduced_feasibility_system(const Region& V) {
  const int n = V.n();
  const std::int64_t twoN = std::int64_t{1} << n;
  if (V.size() == 0 || twoN % V.size() != 0)
    throw std::invalid_argument("reduced_feasibility_system: |V| must divide 2^n");
  ReducedSystem out;
  out.n = n;
  out.complementSize = twoN / V.size();

  const auto sumset = sumset_support(V);
  const IntVec sp = spectrum(V);

  std::vector<ReducedRowMeta> meta;
  meta.push_back({false, 0});                      // f(0) = |A|
  for (Word x : sumset)
    if (x != 0) meta.push_back({false, x});        // f(x) = 0
  meta.push_back({true, 0});                       // sum_x f(x) = |A|^2
  for (Eigen::Index x = 1; x < sp.size(); ++x)
    if (sp[x] != 0) meta.push_back({true, static_cast<Word>(x)});

  const Eigen::Index m = static_cast<Eigen::Index>(meta.size());
  out.sys.A = RatMatrix::Zero(m, twoN);
  out.sys.b = RatVector::Zero(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& rm = meta[i];
    if (!rm.spectrumSide) {
      out.sys.A(i, rm.index) = 1;
      out.sys.b[i] = rm.index == 0 ? Rational(out.complementSize) : Rational(0);
    } else {
      for (std::int64_t x = 0; x < twoN; ++x)
        out.sys.A(i, x) = parity(static_cast<Word>(x) & rm.index) ? -1 : 1;
      out.sys.b[i] = rm.index == 0
                         ? Rational(out.complementSize) * out.complementSize
                         : Rational(0);
    }
  }
  out.meta = std::move(meta);
  return out;
}

Certificate to_dual_certificate(const RatVector& z, const ReducedSystem& origin) {
  if (z.size() != static_cast<Eigen::Index>(origin.meta.size()))
    throw std::invalid_argument("to_dual_certificate: dual length mismatch");
  Certificate cert;
  cert.n = origin.n;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    const auto& rm = origin.meta[i];
    (rm.spectrumSide ? cert.upper : cert.lower)[rm.index] = z[i];
  }
  if (cert.upper.empty() && cert.lower.empty())
    throw std::invalid_argument("to_dual_certificate: zero dual vector");
  return cert;
}

}  // namespace f2tile
