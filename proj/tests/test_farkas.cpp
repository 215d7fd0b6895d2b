#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f2tile/farkas.hpp"
#include "f2tile/gf2.hpp"
#include "f2tile/ideal.hpp"

#include <random>

using namespace f2tile;

namespace {

std::string data_file(const char* name) {
  return std::string(F2TILE_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("dual system for the smallest region") {
  DualSystem d = build_dual(Region(1, {0}));
  CHECK(d.complementSize == 2);
  CHECK(d.pointRows == std::vector<Word>{0});
  CHECK(d.spectrumRows == std::vector<Word>{0, 1});
}

TEST_CASE("dual system row counts for the first putative tile") {
  Region V = table1_region(6);
  DualSystem d = build_dual(V);
  CHECK(d.complementSize == 64);
  CHECK(d.pointRows.size() == sumset_support(V).size());
  IntVec sp = spectrum(V);
  std::int64_t supp = 0;
  for (Eigen::Index x = 0; x < sp.size(); ++x)
    if (sp[x] != 0) ++supp;
  CHECK(static_cast<std::int64_t>(d.spectrumRows.size()) == supp);
}

TEST_CASE("segment expansion") {
  auto cert = parse_certificate_string("(5,3) 2.0\n---\n0 1\n");
  REQUIRE(cert.upper.size() == 3);
  for (Word i : {5u, 6u, 7u}) CHECK(cert.upper.at(i) == 2);
  auto strided = parse_certificate_string("(0,10,4) 1/3\n---\n0 1\n");
  REQUIRE(strided.upper.size() == 3);
  for (Word i : {0u, 4u, 8u}) CHECK(strided.upper.at(i) == Rational(1) / 3);
}

TEST_CASE("exact decimal parsing") {
  auto cert = parse_certificate_string("0 -1024.0\n1 0.25\n---\n2 3\n");
  CHECK(cert.upper.at(0) == -1024);
  CHECK(cert.upper.at(1) == Rational(1) / 4);
  CHECK(cert.lower.at(2) == 3);
}

TEST_CASE("malformed certificates are rejected") {
  CHECK_THROWS(parse_certificate_string("0 1\n"));            // no separator
  CHECK_THROWS(parse_certificate_string("0 1\n0 2\n---\n"));  // conflict
  CHECK_THROWS(parse_certificate_string("---\n"));            // empty
  CHECK_THROWS(parse_certificate_string("n=2\n9 1\n---\n0 1\n"));  // range
  CHECK_NOTHROW(parse_certificate_string("0 1\n0 1.0\n---\n"));  // agreeing dup
}

TEST_CASE("first published certificate parses to the expected maps") {
  auto cert = parse_certificate_file(data_file("cert_k6.txt"));
  CHECK(cert.n == 12);
  REQUIRE(cert.upper.size() == 3);
  CHECK(cert.upper.at(0) == -1024);
  CHECK(cert.upper.at(320) == 1024);
  CHECK(cert.upper.at(640) == 1024);
  CHECK(cert.lower.size() == 16 * 64);
  for (const auto& [idx, val] : cert.lower) CHECK(val == 1);
}

TEST_CASE("third published certificate parses to the expected maps") {
  auto cert = parse_certificate_file(data_file("cert_k8.txt"));
  CHECK(cert.n == 14);
  REQUIRE(cert.upper.size() == 1);
  CHECK(cert.upper.at(0) == -8192);
  CHECK(cert.lower.size() == 8192);
  for (const auto& [idx, val] : cert.lower) {
    CHECK(idx % 2 == 0);
    CHECK(val == 1);
  }
}

TEST_CASE("first published certificate verifies") {
  Region V = table1_region(6);
  auto cert = parse_certificate_file(data_file("cert_k6.txt"));
  auto verdict = verify_certificate(V, cert);
  REQUIRE(verdict.status == Verdict::Valid);
  // The sections validate in the opposite order from the table's description:
  // the entries above the line are the f(x) multipliers.
  CHECK(verdict.convention == "bit-identity, upper=point-side");
  CHECK(verdict.btz == -65536);
}

TEST_CASE("third published certificate does not verify soundly") {
  // Its f-hat section places weight on every even index, but 840 even
  // indices carry no spectrum row; the implied f-hat(x)=0 constraints do not
  // follow from tiling, so no sound reading accepts the vector.
  Region V = table1_region(8);
  auto cert = parse_certificate_file(data_file("cert_k8.txt"));
  VerifyOptions opts;
  opts.offRow = OffRowPolicy::Auto;
  auto verdict = verify_certificate(V, cert, opts);
  CHECK(verdict.status == Verdict::Invalid);
  CHECK(verdict.attempts.size() == 8);  // every convention tried
  bool sawDiagnostic = false;
  for (const auto& att : verdict.attempts)
    if (att.outcome == "INVALID" && !att.detail.empty()) sawDiagnostic = true;
  CHECK(sawDiagnostic);
}

TEST_CASE("verdicts are invariant under positive scaling") {
  Region V = table1_region(6);
  auto cert = parse_certificate_file(data_file("cert_k6.txt"));
  CHECK(certificate_scale_check(V, cert, 1).status == Verdict::Valid);
  CHECK(certificate_scale_check(V, cert, 2).status == Verdict::Valid);
  CHECK(certificate_scale_check(V, cert, Rational(1) / 3).status == Verdict::Valid);
  CHECK_THROWS(certificate_scale_check(V, cert, 0));
}

TEST_CASE("no certificate validates against a tile") {
  Region V(6, {0, 1, 2, 3});  // subspace: tiles F_2^6
  std::mt19937 rng(31);
  std::uniform_int_distribution<Word> idx(0, 63);
  std::uniform_int_distribution<int> val(-8, 8);
  IntVec sp = spectrum(V);
  auto sumset = sumset_support(V);
  int validCount = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Certificate cert;
    cert.n = 6;
    for (int e = 0; e < 6; ++e) {
      int v = val(rng);
      if (v == 0) continue;
      Word i = idx(rng);
      if (trial % 2 == 0) cert.upper[i] = v;
      else cert.lower[i] = v;
    }
    if (cert.upper.empty() && cert.lower.empty()) continue;
    VerifyOptions opts;
    opts.offRow = OffRowPolicy::Auto;
    if (verify_certificate(V, cert, opts).status == Verdict::Valid) ++validCount;
  }
  CHECK(validCount == 0);
}

TEST_CASE("format round-trip") {
  Certificate cert;
  cert.n = 4;
  cert.upper[0] = Rational(-7) / 2;
  cert.upper[3] = 5;
  cert.lower[1] = Rational(1) / 3;
  auto back = parse_certificate_string(format_certificate(cert));
  CHECK(back.n == 4);
  CHECK(back.upper == cert.upper);
  CHECK(back.lower == cert.lower);
}

TEST_CASE("dimension mismatch is an error") {
  Certificate cert;
  cert.n = 4;
  cert.upper[0] = -1;
  CHECK_THROWS(verify_certificate(Region(3, {0}), cert));
}
