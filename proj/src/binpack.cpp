#include "f2tile/binpack.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace f2tile {

Projection::Projection(int n_, std::vector<int> keep_) : n(n_), keep(std::move(keep_)) {
  check_dim(n);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int i : keep)
    if (i < 0 || i >= n)
      throw std::invalid_argument("projection coordinate out of range");
}

Projection Projection::tail(int n, int r) {
  std::vector<int> keep;
  for (int i = r; i < n; ++i) keep.push_back(i);
  return Projection(n, std::move(keep));
}

Word Projection::apply(Word w) const {
  Word out = 0;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (w >> keep[i] & 1u) out |= Word{1} << i;
  return out;
}

std::string census_to_string(const PieceCensus& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [size, mult] : c.counts) {
    if (!first) os << ", ";
    os << mult << "*" << size;
    first = false;
  }
  return os.str();
}

PieceCensus piece_census(const Region& V, const Projection& proj) {
  if (proj.n != V.n()) throw std::invalid_argument("piece_census: dimension mismatch");
  std::unordered_map<Word, std::int64_t> classes;
  for (Word w : V.members()) ++classes[proj.apply(w)];
  PieceCensus c;
  for (const auto& [img, sz] : classes) ++c.counts[static_cast<int>(sz)];
  const int dropped = proj.n - proj.target_dim();
  c.binSize = 1 << dropped;
  c.numBins = BigInt(1) << proj.target_dim();
  if (V.size() == 0 || (BigInt(1) << proj.n) % V.size() != 0)
    throw std::invalid_argument("piece_census: |V| must divide 2^n");
  c.copies = (BigInt(1) << proj.n) / V.size();
  return c;
}

std::vector<BinPattern> enumerate_patterns(const std::vector<int>& sizes, int binSize) {
  std::vector<int> sz = sizes;
  std::sort(sz.begin(), sz.end(), std::greater<>());
  sz.erase(std::unique(sz.begin(), sz.end()), sz.end());
  std::vector<BinPattern> out;
  BinPattern cur;
  // Largest sizes first so the output order is lexicographically decreasing
  // in the largest size, as required for deterministic verdicts.
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (idx == sz.size()) return;
    int s = sz[idx];
    int maxCount = remaining / s;
    for (int cnt = maxCount; cnt >= 0; --cnt) {
      if (cnt > 0) cur.mult[s] = cnt;
      self(self, idx + 1, remaining - cnt * s);
      cur.mult.erase(s);
    }
  };
  rec(rec, 0, binSize);
  return out;
}

namespace {

// DFS over pattern multiplicities.  remaining[i] is the unmet demand for size
// i; binsLeft bins are still to be filled.  Patterns are processed in the
// enumeration order; counts are tried from the largest admissible value down.
bool assign_patterns(const std::vector<BinPattern>& pats,
                     const std::vector<int>& sizes, std::size_t idx,
                     std::vector<BigInt>& remaining, BigInt binsLeft,
                     std::vector<std::pair<BinPattern, BigInt>>& witness) {
  if (idx == pats.size()) {
    if (binsLeft != 0) return false;
    for (const BigInt& r : remaining)
      if (r != 0) return false;
    return true;
  }
  // A size still in demand but absent from all remaining patterns is a dead end.
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (remaining[i] == 0) continue;
    bool coverable = false;
    for (std::size_t p = idx; p < pats.size() && !coverable; ++p)
      coverable = pats[p].mult.count(sizes[i]) != 0;
    if (!coverable) return false;
  }
  const BinPattern& pat = pats[idx];
  auto size_pos = [&](int s) {
    return std::lower_bound(sizes.begin(), sizes.end(), s) - sizes.begin();
  };
  BigInt ub = binsLeft;
  for (const auto& [s, m] : pat.mult)
    ub = std::min(ub, BigInt(remaining[size_pos(s)] / m));

  // A size that appears in no later pattern must be consumed entirely here,
  // which pins this pattern's count; the final pattern is pinned by binsLeft.
  BigInt forced = -1;
  if (idx + 1 == pats.size()) forced = binsLeft;
  for (const auto& [s, m] : pat.mult) {
    bool later = false;
    for (std::size_t p = idx + 1; p < pats.size() && !later; ++p)
      later = pats[p].mult.count(s) != 0;
    if (later) continue;
    const BigInt& rem = remaining[size_pos(s)];
    if (rem % m != 0) return false;
    BigInt need = rem / m;
    if (forced >= 0 && forced != need) return false;
    forced = need;
  }

  auto attempt = [&](const BigInt& cnt) {
    for (const auto& [s, m] : pat.mult) remaining[size_pos(s)] -= cnt * m;
    if (assign_patterns(pats, sizes, idx + 1, remaining, binsLeft - cnt, witness)) {
      if (cnt > 0) witness.emplace_back(pat, cnt);
      return true;
    }
    for (const auto& [s, m] : pat.mult) remaining[size_pos(s)] += cnt * m;
    return false;
  };
  if (forced >= 0) return forced <= ub && attempt(forced);
  for (BigInt cnt = ub; cnt >= 0; --cnt)
    if (attempt(cnt)) return true;
  return false;
}

}  // namespace

FeasibilityVerdict binpack_feasible(const PieceCensus& c, int binSizeCap) {
  if (c.binSize > binSizeCap)
    throw std::invalid_argument("binpack_feasible: bin size " +
                                std::to_string(c.binSize) +
                                " exceeds pattern enumeration cap " +
                                std::to_string(binSizeCap));
  std::vector<int> sizes;
  for (const auto& [s, b] : c.counts) {
    if (s < 1 || s > c.binSize)
      throw std::invalid_argument("binpack_feasible: bad piece size");
    sizes.push_back(s);
  }
  auto pats = enumerate_patterns(sizes, c.binSize);

  FeasibilityVerdict v;
  for (int s : sizes) {
    bool inAny = false;
    for (const auto& p : pats)
      if (p.mult.count(s)) { inAny = true; break; }
    if (!inAny) {
      v.feasible = false;
      v.obstruction = "no admissible bin pattern contains a piece of size " +
                      std::to_string(s);
      return v;
    }
  }

  std::vector<BigInt> remaining;
  for (int s : sizes) remaining.push_back(c.copies * c.counts.at(s));
  if (assign_patterns(pats, sizes, 0, remaining, c.numBins, v.witness)) {
    v.feasible = true;
    std::reverse(v.witness.begin(), v.witness.end());
  } else {
    v.feasible = false;
    v.obstruction = "pattern-count system has no nonnegative integer solution";
  }
  return v;
}

ProjectionReport non_tiling_by_projection(const Region& V, int r, int binSizeCap) {
  if (r < 0 || r >= V.n())
    throw std::invalid_argument("non_tiling_by_projection: r out of range");
  ProjectionReport rep;
  rep.r = r;
  rep.census = piece_census(V, Projection::tail(V.n(), r));
  rep.verdict = binpack_feasible(rep.census, binSizeCap);
  return rep;
}

}  // namespace f2tile
