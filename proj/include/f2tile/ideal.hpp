#pragma once

// Right-shifted partial order on finite integer sets, order-ideal generation
// from generator sets, conversions between set systems and regions, and the
// pairwise-distance polynomial used for optimality reporting.

#include "f2tile/gf2.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace f2tile {

// Strictly decreasing list of non-negative integers; element 0 is the largest.
using FiniteSet = std::vector<int>;

FiniteSet make_finite_set(std::vector<int> elems);

struct SetSystem {
  int n = 0;  // ambient dimension; every element index < n
  std::vector<FiniteSet> sets;
};

// S >=_R T iff |S| >= |T| and the i-th largest elements satisfy S_i >= T_i.
bool geq_r(const FiniteSet& S, const FiniteSet& T);

// Downward closure of the generators under >=_R: { T : T <=_R some generator }.
// BFS over the two closure moves (decrement an element, drop an element).
SetSystem ideal_from_generators(const std::vector<FiniteSet>& gens, int n);

Region to_region(const SetSystem& S);
SetSystem to_set_system(const Region& V);

// coeffs[d] = #{ ordered pairs (A,B) : |A delta B| = d }; this is the pairwise
// Hamming-distance distribution of the corresponding region, and
// f(p) = sum_d coeffs[d] (p/(1-p))^d.
struct FPoly {
  std::vector<std::int64_t> coeffs;
};

FPoly f_poly(const SetSystem& S);

struct Table1Row {
  int k;  // putative complement has cardinality 2^k
  int n;
  std::vector<FiniteSet> generators;
};

// The ten putative 64-element tiles, keyed by k in {6..9, 16..21}.
const std::vector<Table1Row>& table1();
const Table1Row& table1_row(int k);
Region table1_region(int k);

// Generator file: header "n=<dim>", one generator per line as comma-separated
// indices.
std::pair<int, std::vector<FiniteSet>> read_generators(std::istream& in);

}  // namespace f2tile
