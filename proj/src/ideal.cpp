#include "f2tile/ideal.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f2tile {

FiniteSet make_finite_set(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end(), std::greater<>());
  for (std::size_t i = 0; i + 1 < elems.size(); ++i)
    if (elems[i] == elems[i + 1])
      throw std::invalid_argument("finite set has repeated element");
  for (int e : elems)
    if (e < 0) throw std::invalid_argument("finite set element negative");
  return elems;
}

bool geq_r(const FiniteSet& S, const FiniteSet& T) {
  if (S.size() < T.size()) return false;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (S[i] < T[i]) return false;
  return true;
}

SetSystem ideal_from_generators(const std::vector<FiniteSet>& gens, int n) {
  for (const auto& g : gens)
    for (int e : g)
      if (e >= n)
        throw std::invalid_argument("generator element " + std::to_string(e) +
                                    " out of range for n=" + std::to_string(n));
  std::set<FiniteSet> seen;
  std::deque<FiniteSet> work(gens.begin(), gens.end());
  for (auto& g : work) g = make_finite_set(g);
  while (!work.empty()) {
    FiniteSet s = std::move(work.front());
    work.pop_front();
    if (!seen.insert(s).second) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      // drop element i
      FiniteSet d = s;
      d.erase(d.begin() + i);
      if (!seen.count(d)) work.push_back(d);
      // decrement element i, keeping the list strictly decreasing
      int below = (i + 1 < s.size()) ? s[i + 1] : -1;
      if (s[i] - 1 > below) {
        FiniteSet e = s;
        --e[i];
        if (!seen.count(e)) work.push_back(e);
      }
    }
  }
  SetSystem out;
  out.n = n;
  out.sets.assign(seen.begin(), seen.end());
  return out;
}

Region to_region(const SetSystem& S) {
  std::vector<Word> words;
  words.reserve(S.sets.size());
  for (const auto& s : S.sets) {
    Word w = 0;
    for (int e : s) {
      if (e >= S.n)
        throw std::invalid_argument("set element out of range");
      w |= Word{1} << e;
    }
    words.push_back(w);
  }
  return Region(S.n, std::move(words));
}

SetSystem to_set_system(const Region& V) {
  SetSystem out;
  out.n = V.n();
  for (Word w : V.members()) {
    FiniteSet s;
    for (int i = V.n() - 1; i >= 0; --i)
      if (w >> i & 1u) s.push_back(i);
    out.sets.push_back(std::move(s));
  }
  return out;
}

FPoly f_poly(const SetSystem& S) {
  const Region V = to_region(S);
  FPoly p;
  p.coeffs.assign(static_cast<std::size_t>(V.n()) + 1, 0);
  for (Word a : V.members())
    for (Word b : V.members()) ++p.coeffs[std::popcount(a ^ b)];
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {6, 12, {{11}, {10, 5}, {9, 8}}},
      {7, 13, {{12}, {10, 4}, {9, 8}}},
      {8, 14, {{13, 2}, {13, 1, 0}, {3, 2, 0}}},
      {9, 15, {{14, 1, 0}, {10, 2}}},
      {16, 22, {{21, 1}}},
      {17, 23, {{22, 0}, {19, 1}}},
      {18, 24, {{23, 0}, {17, 1}}},
      {19, 25, {{24, 0}, {15, 1}}},
      {20, 26, {{25, 0}, {13, 1}}},
      {21, 27, {{26, 0}, {11, 1}}},
  };
  return rows;
}

const Table1Row& table1_row(int k) {
  for (const auto& r : table1())
    if (r.k == k) return r;
  throw std::invalid_argument("no putative-tile row with k=" + std::to_string(k));
}

Region table1_region(int k) {
  const Table1Row& r = table1_row(k);
  return to_region(ideal_from_generators(r.generators, r.n));
}

std::pair<int, std::vector<FiniteSet>> read_generators(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<FiniteSet> gens;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string t = line.substr(b, e - b + 1);
    if (t[0] == '#') continue;
    if (n < 0) {
      if (t.rfind("n=", 0) != 0)
        throw std::runtime_error("generator file: expected header n=<dim>");
      n = std::stoi(t.substr(2));
      check_dim(n);
      continue;
    }
    std::vector<int> elems;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) elems.push_back(std::stoi(tok));
    gens.push_back(make_finite_set(std::move(elems)));
  }
  if (n < 0) throw std::runtime_error("generator file: missing header");
  return {n, std::move(gens)};
}

}  // namespace f2tile
