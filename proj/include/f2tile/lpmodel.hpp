#pragma once

// Primal feasibility LP for the tiling problem: variables b_u = chi_A*chi_A(u)
// and c_x = chi_A hat(x)^2 linked by the transform, with fixings induced by V.
// The transform link is realized either densely (one row per output) or by
// butterfly intermediates t_{i,j}, where an identically-zero input lets the
// output pass through without a new variable.

#include "f2tile/farkas.hpp"
#include "f2tile/gf2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f2tile {

enum class Relation { Eq, Le, Ge };

struct LpColumn {
  std::string name;
  Rational lower = 0;              // ignored when free
  std::optional<Rational> upper;   // none = +inf
  bool free = false;               // butterfly intermediates
  bool integral = false;           // for optional MPS integer markers
};

struct LpRow {
  std::string name;
  Relation rel = Relation::Eq;
  Rational rhs = 0;
  std::vector<std::pair<int, Rational>> terms;  // (column, nonzero coefficient)
};

struct LpStats {
  std::int64_t rows = 0;
  std::int64_t vars = 0;
  std::int64_t nonzeros = 0;
};

// Semantic tag per column, used to evaluate witness assignments.
struct ColMeta {
  char kind = 'b';  // 'b', 'c', or 't'
  int layer = 0;    // butterfly layer for 't'
  Word index = 0;   // u, x, or butterfly position
};

struct LpModel {
  int n = 0;
  std::int64_t complementSize = 0;  // |A|
  bool butterfly = false;
  bool inputIsB = false;  // orientation: which side feeds the transform
  std::vector<LpColumn> cols;
  std::vector<LpRow> rows;
  std::vector<ColMeta> meta;  // parallel to cols
};

struct LpBuildOptions {
  bool useButterfly = true;
  bool usePassThrough = true;  // requires useButterfly
  bool fullRank = false;
  bool halvingEquation = true;
};

// Builds the feasibility system for region V (|A| = 2^n/|V|):
//   b_u in [0,|A|], c_x in [0,|A|^2];
//   b_0 = |A|, c_0 = |A|^2;
//   b_u = 0 where chi_V*chi_V(u) != 0, u != 0;
//   c_x = 0 where chi_V hat(x) != 0, x != 0;
//   transform link c = F b (orientation chosen to zero out more butterflies);
//   optionally sum_u b_u = |A|^2 and c_x <= (|A|-2)^2 on the free c columns.
LpModel build_primal(const Region& V, const LpBuildOptions& opts = {});

// Substitutes b,c (and butterfly intermediates) derived exactly from A into
// every row and bound of the model built from V.
bool witness_check(const Region& V, const Region& A,
                   const LpBuildOptions& opts = {});

LpStats model_stats(const LpModel& model);

enum class LpFormat { LpText, FreeMps };

// Deterministic serialization; integer coefficients printed exactly.  With
// integerMarkers set, the MPS writer brackets integral columns in MARKER
// lines for external MIP use.
std::string export_lp(const LpModel& model, LpFormat format,
                      bool integerMarkers = false);

// Parses text produced by export_lp (same format); round-trips stats exactly.
LpModel parse_lp(const std::string& text, LpFormat format);

}  // namespace f2tile
