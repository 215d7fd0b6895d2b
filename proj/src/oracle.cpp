#include "f2tile/oracle.hpp"

#include "f2tile/binpack.hpp"
#include "f2tile/exactlp.hpp"
#include "f2tile/farkas.hpp"
#include "f2tile/ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace f2tile {

namespace {

// Coordinates of w with respect to an echelonized basis (descending leading
// bits); throws if w is outside the span.
Word coords_in_basis(Word w, const std::vector<Word>& basis) {
  Word x = w, c = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if ((x ^ basis[i]) < x) {
      x ^= basis[i];
      c |= Word{1} << i;
    }
  }
  if (x != 0) throw std::logic_error("word outside span");
  return c;
}

Word word_from_coords(Word c, const std::vector<Word>& basis) {
  Word w = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c >> i & 1u) w ^= basis[i];
  return w;
}

struct CoverSearch {
  int d;                            // dimension of the search space
  std::vector<Word> piece;          // V in span coordinates, contains shifts
  std::vector<char> covered;
  std::vector<Word> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t cap;
  bool capped = false;

  bool dfs() {
    if (cap && nodes > cap) {
      capped = true;
      return false;
    }
    ++nodes;
    Word u = 0;
    const Word total = Word{1} << d;
    while (u < total && covered[u]) ++u;
    if (u == total) return true;
    // u must be covered by some translate V + a with a = u + v.
    for (Word v : piece) {
      Word a = u ^ v;
      bool ok = true;
      for (Word p : piece)
        if (covered[p ^ a]) { ok = false; break; }
      if (!ok) continue;
      for (Word p : piece) covered[p ^ a] = 1;
      chosen.push_back(a);
      if (dfs()) return true;
      if (capped) return false;
      chosen.pop_back();
      for (Word p : piece) covered[p ^ a] = 0;
    }
    return false;
  }
};

}  // namespace

ComplementResult find_complement(const Region& V, const OracleOptions& opts) {
  ComplementResult res;
  if (V.size() == 0) return res;

  const std::vector<Word> basis = span_basis(V);
  const int d = static_cast<int>(basis.size());
  if (d > 22) throw std::invalid_argument("find_complement: span too large");
  if ((std::int64_t{1} << d) % V.size() != 0) return res;  // cannot tile <V>

  CoverSearch s;
  s.d = d;
  s.cap = opts.nodeCap;
  for (Word w : V.members()) s.piece.push_back(coords_in_basis(w, basis));
  std::sort(s.piece.begin(), s.piece.end());
  s.covered.assign(std::size_t{1} << d, 0);

  bool found = s.dfs();
  res.nodes = s.nodes;
  if (!found) {
    res.status = s.capped ? SearchStatus::Capped : SearchStatus::Exhausted;
    return res;
  }

  // Map back to F_2^n and extend by a linear complement W of <V>:
  // A_full = A_span + W.
  std::vector<Word> leadFree;
  {
    std::vector<char> isLead(static_cast<std::size_t>(V.n()), 0);
    for (Word b : basis) {
      int lead = 31 - __builtin_clz(b);
      isLead[lead] = 1;
    }
    for (int i = 0; i < V.n(); ++i)
      if (!isLead[i]) leadFree.push_back(Word{1} << i);
  }
  std::vector<Word> members;
  const std::size_t wcount = std::size_t{1} << leadFree.size();
  for (Word a : s.chosen) {
    Word base = word_from_coords(a, basis);
    for (std::size_t m = 0; m < wcount; ++m) {
      Word w = base;
      for (std::size_t i = 0; i < leadFree.size(); ++i)
        if (m >> i & 1u) w ^= leadFree[i];
      members.push_back(w);
    }
  }
  res.status = SearchStatus::Found;
  res.complement = Region(V.n(), std::move(members));
  return res;
}

RankClass classify_full_rank(const Region& V, const Region& A) {
  if (!is_tile_pair(V, A))
    throw std::invalid_argument("classify_full_rank: not a tile pair");
  const bool vp = span_dim(V) == V.n();
  const bool ap = span_dim(A) == A.n();
  if (vp && ap) return RankClass::FullRank;
  if (vp) return RankClass::VProperOnly;
  return RankClass::Neither;
}

std::vector<Region> downward_closed_regions(int n, int size) {
  if (n > 6) throw std::invalid_argument("downward_closed_regions: n too large");
  const Word total = Word{1} << n;
  // Enumerate down-sets of >=_R on subsets of {0..n-1} with exactly `size`
  // members.  Elements are processed in an order compatible with the order
  // (by popcount, then value), so prefixes of a down-set stay down-closed.
  std::vector<Word> elems;
  for (Word w = 0; w < total; ++w) elems.push_back(w);
  std::sort(elems.begin(), elems.end(), [](Word a, Word b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  // Precompute the set of words directly below each word under >=_R.
  auto set_of = [n](Word w) {
    FiniteSet s;
    for (int i = n - 1; i >= 0; --i)
      if (w >> i & 1u) s.push_back(i);
    return s;
  };
  std::vector<std::vector<Word>> below(total);
  for (Word a = 0; a < total; ++a)
    for (Word b = 0; b < total; ++b)
      if (a != b && geq_r(set_of(a), set_of(b))) below[a].push_back(b);

  std::vector<Region> out;
  std::vector<char> in(total, 0);
  std::vector<Word> cur;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.emplace_back(n, cur);
      return;
    }
    if (idx == elems.size()) return;
    if (elems.size() - idx < size - cur.size()) return;
    Word w = elems[idx];
    bool can = true;
    for (Word b : below[w])
      if (!in[b]) { can = false; break; }
    if (can) {
      in[w] = 1;
      cur.push_back(w);
      self(self, idx + 1);
      cur.pop_back();
      in[w] = 0;
    }
    self(self, idx + 1);
  };
  rec(rec, 0);
  return out;
}

ConsistencyReport cross_validate(const Region& V, const OracleOptions& opts) {
  ConsistencyReport rep;
  rep.oracle = find_complement(V, opts);

  const std::int64_t twoN = std::int64_t{1} << V.n();
  const bool divides = V.size() != 0 && twoN % V.size() == 0;

  if (divides) {
    // Small dimensions only, so lifting the bin-size cap to 2^(n-1) is safe.
    const int cap = std::max(kDefaultBinSizeCap, 1 << (V.n() - 1));
    for (int r = 1; r < V.n(); ++r) {
      auto pr = non_tiling_by_projection(V, r, cap);
      if (!pr.verdict.feasible) {
        rep.binpackAllFeasible = false;
        if (rep.firstInfeasibleR < 0) rep.firstInfeasibleR = r;
      }
    }
    auto red = reduced_feasibility_system(V);
    auto lp = solve_phase1(red.sys);
    rep.lpFeasible = lp.feasible;
    if (!lp.feasible) {
      Certificate cert = to_dual_certificate(lp.dual, red);
      VerifyOptions vo;
      vo.bits = BitConvention::Identity;
      vo.sections = SectionMeaning::UpperIsSpectrumSide;
      rep.certificateValid =
          verify_certificate(V, cert, vo).status == Verdict::Valid;
    }
  } else {
    rep.binpackAllFeasible = true;
    rep.lpFeasible = false;
  }

  // Soundness relations.  The oracle finding a complement implies every
  // projection packs and the LP is feasible; an LP-infeasible verdict must
  // come with a verifiable certificate.
  rep.consistent = true;
  if (rep.oracle.found()) {
    if (divides && (!rep.binpackAllFeasible || !rep.lpFeasible))
      rep.consistent = false;
  } else if (rep.oracle.proven_non_tile() && divides) {
    if (!rep.lpFeasible && !rep.certificateValid) rep.consistent = false;
  }
  return rep;
}

}  // namespace f2tile
