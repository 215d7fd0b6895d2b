#pragma once

// Dual block system for the tile-feasibility LP and exact verification of
// non-tiling certificates, including the published ones.
//
// Layout of the block system (for region V with |A| = 2^n/|V|): rows are
//   (1) one row per dual element xh:  sum_x (-1)^{x.xh} f(x) - fh(xh) = 0
//   (2) f(0) = |A|
//   (3) fh(0) = |A|^2
//   (4) f(x) = 0 for x in (V+V)\{0}
//   (5) fh(xh) = 0 for xh != 0 with chi_V hat(xh) != 0
// over nonnegative variables f(x), fh(xh).  A certificate is a dual vector z
// with A^T z >= 0 and b^T z < 0, where b is 0 except b_{f(0)} = |A| and
// b_{fh(0)} = |A|^2.  Following the equality relaxation, the row-(1)
// multipliers are eliminated: z_xh := z_{fh(xh)} where that row exists, 0
// otherwise, so a certificate only lists the f- and fh-row multipliers.

#include "f2tile/gf2.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace f2tile {

using Rational = boost::multiprecision::mpq_rational;

struct DualSystem {
  Region V;
  std::int64_t complementSize = 0;      // |A| = 2^n / |V|
  std::vector<Word> pointRows;          // x with an f(x) row: {0} u (V+V)\{0}
  std::vector<Word> spectrumRows;       // xh with an fh(xh) row: {0} u supp(chi_V hat)\{0}
};

DualSystem build_dual(const Region& V);

// Sparse rational certificate as parsed from the text format.  Which section
// is the fh part is a convention resolved at verification time.
struct Certificate {
  int n = -1;  // -1 when the file carries no header
  std::map<Word, Rational> upper;  // first section of the file
  std::map<Word, Rational> lower;  // second section
};

// Format: optional header "n=<dim>"; upper section; a separator line "---";
// lower section.  Each entry line is "idx value", "(c,l) value" (indices
// c..c+l-1) or "(c,l,s) value" (c, c+s, ... while < c+l).  Values are decimal
// or rational "p/q", parsed exactly.
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate_string(const std::string& text);
Certificate parse_certificate_file(const std::string& path);
std::string format_certificate(const Certificate& cert);

enum class BitConvention { Identity, Reversed, Auto };
// The published tables do not say unambiguously which section carries the
// fh(xh) entries; Auto tries both assignments.
enum class SectionMeaning { UpperIsSpectrumSide, UpperIsPointSide, Auto };
enum class OffRowPolicy { Strict, Ignore, Auto };

struct VerifyOptions {
  BitConvention bits = BitConvention::Auto;
  SectionMeaning sections = SectionMeaning::Auto;
  // Strict rejects nonzero entries on nonexistent rows; Ignore drops them
  // (sound: the remaining vector is checked from scratch).  Auto prefers
  // strict and falls back to ignore.
  OffRowPolicy offRow = OffRowPolicy::Strict;
};

struct VerifyAttempt {
  std::string convention;
  std::string outcome;           // "VALID", "INVALID", "MALFORMED"
  std::string detail;            // first violated column / off-row entry
  Rational btz = 0;
};

struct Verdict {
  enum Status { Valid, Invalid, Malformed };
  Status status = Malformed;
  Rational btz = 0;              // b^T z under the accepted convention
  std::string convention;        // accepted convention description
  std::vector<VerifyAttempt> attempts;  // every convention tried, in order
};

Verdict verify_certificate(const Region& V, const Certificate& cert,
                           const VerifyOptions& opts = {});

// Homogeneity check: positive scaling must preserve the verdict.
Verdict certificate_scale_check(const Region& V, const Certificate& cert,
                                const Rational& lambda,
                                const VerifyOptions& opts = {});

}  // namespace f2tile
