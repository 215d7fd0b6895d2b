#pragma once

// Projection criterion: piece censuses under coordinate projections and exact
// feasibility of the induced bin-packing counting system.  Bin counts can be
// astronomically large, so the system is solved over pattern multiplicities
// with big integers, never by materializing bins.

#include "f2tile/gf2.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <string>
#include <vector>

namespace f2tile {

using BigInt = boost::multiprecision::mpz_int;

struct Projection {
  int n = 0;                 // source dimension
  std::vector<int> keep;     // retained coordinate indices, sorted

  Projection() = default;
  Projection(int n, std::vector<int> keep);

  // Projection of coordinates r..n-1.
  static Projection tail(int n, int r);

  int target_dim() const { return static_cast<int>(keep.size()); }
  Word apply(Word w) const;
};

struct PieceCensus {
  std::map<int, std::int64_t> counts;  // piece size -> multiplicity b_i
  int binSize = 0;                     // c = |U|/|W| = 2^(n-|keep|)
  BigInt numBins = 0;                  // |W|
  BigInt copies = 0;                   // |U|/|V|
};

std::string census_to_string(const PieceCensus& c);

// Multiset of cardinalities of the nonempty pieces P_{0,w}; by translation the
// census of P_{0,.} determines all piece sizes.
PieceCensus piece_census(const Region& V, const Projection& proj);

// A way to fill one bin exactly: multiset of piece sizes summing to binSize.
struct BinPattern {
  std::map<int, int> mult;  // size -> count within one bin
};

// All patterns over the available sizes, ordered lexicographically by
// decreasing largest size (deterministic branch order).
std::vector<BinPattern> enumerate_patterns(const std::vector<int>& sizes, int binSize);

struct FeasibilityVerdict {
  bool feasible = false;
  // Witness: pattern -> number of bins filled that way (feasible case).
  std::vector<std::pair<BinPattern, BigInt>> witness;
  std::string obstruction;  // infeasible case
};

inline constexpr int kDefaultBinSizeCap = 24;

// Decides whether copies copies of each piece can exactly fill numBins bins of
// capacity binSize: nonnegative integers d_{i,j} with sum_i i d_{i,j} = binSize
// per bin and sum_j d_{i,j} = copies*b_i per size.
FeasibilityVerdict binpack_feasible(const PieceCensus& c,
                                    int binSizeCap = kDefaultBinSizeCap);

struct ProjectionReport {
  int r = 0;
  PieceCensus census;
  FeasibilityVerdict verdict;
  // INFEASIBLE proves V is not a tile; FEASIBLE is inconclusive.
  bool certified_non_tile() const { return !verdict.feasible; }
};

ProjectionReport non_tiling_by_projection(const Region& V, int r,
                                          int binSizeCap = kDefaultBinSizeCap);

}  // namespace f2tile
