#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f2tile/exactlp.hpp"
#include "f2tile/farkas.hpp"
#include "f2tile/gf2.hpp"

#include <random>

using namespace f2tile;

namespace {

// The pinned desk-scale non-tile in F_2^6: the right-shift-closed region
// generated by {5,0}, {4,1}, {3,2}.  Exhaustive search proves it has no
// tiling complement.
Region fixture_region() {
  return Region(6, {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17, 18, 32, 33});
}

bool dual_is_sound(const RationalSystem& sys, const RatVector& z) {
  RatVector aty = sys.A.transpose() * z;
  for (Eigen::Index j = 0; j < aty.size(); ++j)
    if (aty[j] < 0) return false;
  Rational btz = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) btz += sys.b[i] * z[i];
  return btz < 0;
}

bool point_is_sound(const RationalSystem& sys, const RatVector& y) {
  for (Eigen::Index j = 0; j < y.size(); ++j)
    if (y[j] < 0) return false;
  RatVector r = sys.A * y - sys.b;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("one-variable infeasible system") {
  RationalSystem sys;
  sys.A.resize(1, 1);
  sys.A(0, 0) = 1;
  sys.b.resize(1);
  sys.b[0] = -1;
  auto res = solve_phase1(sys);
  REQUIRE_FALSE(res.feasible);
  CHECK(dual_is_sound(sys, res.dual));
}

TEST_CASE("one-variable feasible system") {
  RationalSystem sys;
  sys.A.resize(1, 1);
  sys.A(0, 0) = 2;
  sys.b.resize(1);
  sys.b[0] = 3;
  auto res = solve_phase1(sys);
  REQUIRE(res.feasible);
  CHECK(res.point[0] == Rational(3) / 2);
}

TEST_CASE("reduced system of a subspace is feasible") {
  Region V(2, {0, 1});
  ReducedSystem rs = reduced_feasibility_system(V);
  CHECK(rs.n == 2);
  CHECK(rs.complementSize == 2);
  auto res = solve_phase1(rs.sys);
  REQUIRE(res.feasible);
  CHECK(point_is_sound(rs.sys, res.point));
}

TEST_CASE("reduced system rows match the point/spectrum layout") {
  Region V = fixture_region();
  ReducedSystem rs = reduced_feasibility_system(V);
  auto sumset = sumset_support(V);
  IntVec sp = spectrum(V);
  std::int64_t supp = 0;
  for (Eigen::Index x = 0; x < sp.size(); ++x)
    if (sp[x] != 0) ++supp;
  std::int64_t pointRows = 0, specRows = 0;
  for (const auto& m : rs.meta) (m.spectrumSide ? specRows : pointRows)++;
  CHECK(pointRows == static_cast<std::int64_t>(sumset.size()));
  CHECK(specRows == supp);
  CHECK(rs.sys.A.rows() == pointRows + specRows);
  CHECK(rs.sys.A.cols() == 64);
}

TEST_CASE("fixture is LP-infeasible with a verifiable certificate") {
  Region V = fixture_region();
  ReducedSystem rs = reduced_feasibility_system(V);
  auto res = solve_phase1(rs.sys);
  REQUIRE_FALSE(res.feasible);
  CHECK(dual_is_sound(rs.sys, res.dual));

  Certificate cert = to_dual_certificate(res.dual, rs);
  CHECK(cert.n == 6);
  VerifyOptions opts;
  opts.bits = BitConvention::Identity;
  opts.sections = SectionMeaning::UpperIsSpectrumSide;
  auto verdict = verify_certificate(V, cert, opts);
  REQUIRE(verdict.status == Verdict::Valid);
  CHECK(verdict.btz < 0);

  // Clearing denominators preserves validity.
  Rational lcmScale = 1;
  for (const auto& [i, v] : cert.upper)
    lcmScale *= Rational(boost::multiprecision::denominator(v));
  for (const auto& [i, v] : cert.lower)
    lcmScale *= Rational(boost::multiprecision::denominator(v));
  CHECK(certificate_scale_check(V, cert, lcmScale).status == Verdict::Valid);
}

TEST_CASE("certificate round-trip through text for the fixture") {
  Region V = fixture_region();
  ReducedSystem rs = reduced_feasibility_system(V);
  auto res = solve_phase1(rs.sys);
  REQUIRE_FALSE(res.feasible);
  Certificate cert = to_dual_certificate(res.dual, rs);
  Certificate back = parse_certificate_string(format_certificate(cert));
  VerifyOptions opts;
  opts.bits = BitConvention::Identity;
  opts.sections = SectionMeaning::UpperIsSpectrumSide;
  CHECK(verify_certificate(V, back, opts).status == Verdict::Valid);
}

TEST_CASE("random small systems: exactly one of point or dual exists") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> dim(1, 5), coef(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), k = dim(rng);
    RationalSystem sys;
    sys.A.resize(m, k);
    sys.b.resize(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) sys.A(i, j) = coef(rng);
      sys.b[i] = coef(rng);
    }
    auto res = solve_phase1(sys);
    if (res.feasible) {
      CHECK(point_is_sound(sys, res.point));
    } else {
      CHECK(dual_is_sound(sys, res.dual));
    }
  }
}

TEST_CASE("solver is deterministic") {
  Region V = fixture_region();
  ReducedSystem rs = reduced_feasibility_system(V);
  auto a = solve_phase1(rs.sys);
  auto b = solve_phase1(rs.sys);
  CHECK(a.feasible == b.feasible);
  CHECK(a.pivots == b.pivots);
  CHECK(a.dual == b.dual);
}

TEST_CASE("size limits are enforced") {
  RationalSystem sys;
  sys.A.resize(2, 2);
  sys.A.setZero();
  sys.b.resize(2);
  sys.b.setZero();
  SimplexOptions opts;
  opts.maxRows = 1;
  CHECK_THROWS(solve_phase1(sys, opts));
}
