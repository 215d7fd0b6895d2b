#include "f2tile/lpmodel.hpp"

#include <stdexcept>

namespace f2tile {

namespace {

// Symbolic value of a butterfly wire: identically zero, or +/- one column.
struct Node {
  bool zero = true;
  int col = -1;
  int sign = 1;
};

}  // namespace

LpModel build_primal(const Region& V, const LpBuildOptions& opts) {
  if (opts.usePassThrough && !opts.useButterfly)
    throw std::invalid_argument("build_primal: pass-through requires butterfly");
  const int n = V.n();
  const std::int64_t twoN = std::int64_t{1} << n;
  if (V.size() == 0 || twoN % V.size() != 0)
    throw std::invalid_argument("build_primal: |V| must divide 2^n");

  LpModel m;
  m.n = n;
  m.complementSize = twoN / V.size();
  const Rational asz(m.complementSize);

  auto colB = [&](Word u) { return static_cast<int>(u); };
  auto colC = [&](Word x) { return static_cast<int>(twoN + x); };
  for (std::int64_t u = 0; u < twoN; ++u)
    m.cols.push_back({"b_" + std::to_string(u), 0, asz, false, true});
  for (std::int64_t x = 0; x < twoN; ++x)
    m.cols.push_back({"c_" + std::to_string(x), 0, asz * asz, false, true});
  for (std::int64_t u = 0; u < twoN; ++u)
    m.meta.push_back({'b', 0, static_cast<Word>(u)});
  for (std::int64_t x = 0; x < twoN; ++x)
    m.meta.push_back({'c', 0, static_cast<Word>(x)});

  const auto sumset = sumset_support(V);
  const IntVec sp = spectrum(V);
  std::vector<char> bZero(twoN, 0), cZero(twoN, 0);
  for (Word u : sumset)
    if (u != 0) bZero[u] = 1;
  std::int64_t specCount = 0;
  for (std::int64_t x = 0; x < twoN; ++x)
    if (sp[x] != 0) {
      ++specCount;
      if (x != 0) cZero[x] = 1;
    }

  m.rows.push_back({"fix_b_0", Relation::Eq, asz, {{colB(0), 1}}});
  m.rows.push_back({"fix_c_0", Relation::Eq, asz * asz, {{colC(0), 1}}});
  for (Word u : sumset)
    if (u != 0)
      m.rows.push_back(
          {"fix_b_" + std::to_string(u), Relation::Eq, 0, {{colB(u), 1}}});
  for (std::int64_t x = 1; x < twoN; ++x)
    if (cZero[x])
      m.rows.push_back(
          {"fix_c_" + std::to_string(x), Relation::Eq, 0, {{colC(static_cast<Word>(x)), 1}}});

  // Orientation: feed the side with more zero fixings into the transform so
  // more butterflies pass through; ties transform the c side.
  m.inputIsB = static_cast<std::int64_t>(sumset.size()) > specCount;
  m.butterfly = opts.useButterfly && n > 0;

  // Output row for position j: target = expression, where the target column
  // carries coefficient 1 (c_j) or 2^n (b_j, since F c = 2^n b).
  auto link_row = [&](Word j, const std::vector<std::pair<int, Rational>>& expr) {
    LpRow row;
    row.name = "lnk_" + std::to_string(j);
    row.rel = Relation::Eq;
    row.rhs = 0;
    if (m.inputIsB)
      row.terms.emplace_back(colC(j), 1);
    else
      row.terms.emplace_back(colB(j), Rational(twoN));
    for (const auto& [c, coef] : expr) row.terms.emplace_back(c, -coef);
    m.rows.push_back(std::move(row));
  };

  if (!m.butterfly) {
    for (std::int64_t j = 0; j < twoN; ++j) {
      std::vector<std::pair<int, Rational>> expr;
      for (std::int64_t x = 0; x < twoN; ++x) {
        int s = parity(static_cast<Word>(j & x)) ? -1 : 1;
        expr.emplace_back(m.inputIsB ? colB(static_cast<Word>(x))
                                     : colC(static_cast<Word>(x)),
                          Rational(s));
      }
      link_row(static_cast<Word>(j), expr);
    }
  } else {
    std::vector<Node> node(twoN);
    for (std::int64_t j = 0; j < twoN; ++j) {
      bool z = m.inputIsB ? bZero[j] : cZero[j];
      if (opts.usePassThrough && z)
        node[j] = Node{true, -1, 1};
      else
        node[j] = Node{false, m.inputIsB ? colB(static_cast<Word>(j))
                                         : colC(static_cast<Word>(j)),
                       1};
    }
    auto expr_of = [](const Node& a, const Node& b, bool minus) {
      std::vector<std::pair<int, Rational>> e;
      if (!a.zero) e.emplace_back(a.col, Rational(a.sign));
      if (!b.zero) e.emplace_back(b.col, Rational(minus ? -b.sign : b.sign));
      return e;
    };
    for (int layer = 0; layer < n; ++layer) {
      const std::int64_t h = std::int64_t{1} << layer;
      const bool last = layer == n - 1;
      std::vector<Node> next(twoN);
      for (std::int64_t i = 0; i < twoN; i += h << 1) {
        for (std::int64_t j = i; j < i + h; ++j) {
          const Node a = node[j];
          const Node b = node[j + h];
          if (last) {
            link_row(static_cast<Word>(j), expr_of(a, b, false));
            link_row(static_cast<Word>(j + h), expr_of(a, b, true));
            continue;
          }
          auto emit = [&](std::int64_t pos, bool minus) -> Node {
            if (a.zero && b.zero) return Node{true, -1, 1};
            if (opts.usePassThrough && b.zero) return a;
            if (opts.usePassThrough && a.zero)
              return Node{false, b.col, minus ? -b.sign : b.sign};
            int col = static_cast<int>(m.cols.size());
            m.cols.push_back({"t_" + std::to_string(layer + 1) + "_" +
                                  std::to_string(pos),
                              0, std::nullopt, true, false});
            m.meta.push_back({'t', layer + 1, static_cast<Word>(pos)});
            LpRow row;
            row.name = "bfy_" + std::to_string(layer + 1) + "_" +
                       std::to_string(pos);
            row.rel = Relation::Eq;
            row.rhs = 0;
            row.terms.emplace_back(col, 1);
            for (auto& [c, coef] : expr_of(a, b, minus))
              row.terms.emplace_back(c, -coef);
            m.rows.push_back(std::move(row));
            return Node{false, col, 1};
          };
          next[j] = emit(j, false);
          next[j + h] = emit(j + h, true);
        }
      }
      node = std::move(next);
    }
  }

  if (opts.halvingEquation) {
    LpRow row;
    row.name = "halve";
    row.rel = Relation::Eq;
    row.rhs = asz * asz;
    for (std::int64_t u = 0; u < twoN; ++u)
      row.terms.emplace_back(colB(static_cast<Word>(u)), 1);
    m.rows.push_back(std::move(row));
  }
  if (opts.fullRank) {
    const Rational cap = (asz - 2) * (asz - 2);
    for (std::int64_t x = 1; x < twoN; ++x)
      if (!cZero[x])
        m.rows.push_back({"rank_" + std::to_string(x), Relation::Le, cap,
                          {{colC(static_cast<Word>(x)), 1}}});
  }
  return m;
}

bool witness_check(const Region& V, const Region& A,
                   const LpBuildOptions& opts) {
  if (V.n() != A.n())
    throw std::invalid_argument("witness_check: dimension mismatch");
  const std::int64_t twoN = std::int64_t{1} << V.n();
  if (V.size() * A.size() != twoN)
    throw std::invalid_argument("witness_check: |V||A| must equal 2^n");
  LpModel m = build_primal(V, opts);

  const IntVec b = convolve(indicator(A), indicator(A));
  const IntVec spA = spectrum(A);

  // Butterfly wire values for every layer, from the input side forward.
  std::vector<Vec<Rational>> layers;
  if (m.butterfly) {
    Vec<Rational> cur(twoN);
    for (std::int64_t j = 0; j < twoN; ++j)
      cur[j] = m.inputIsB ? Rational(b[j]) : Rational(spA[j]) * spA[j];
    layers.push_back(cur);
    for (int layer = 0; layer < m.n - 1; ++layer) {
      const std::int64_t h = std::int64_t{1} << layer;
      Vec<Rational> nxt(twoN);
      for (std::int64_t i = 0; i < twoN; i += h << 1) {
        for (std::int64_t j = i; j < i + h; ++j) {
          nxt[j] = cur[j] + cur[j + h];
          nxt[j + h] = cur[j] - cur[j + h];
        }
      }
      layers.push_back(nxt);
      cur = std::move(nxt);
    }
  }

  std::vector<Rational> val(m.cols.size());
  for (std::size_t i = 0; i < m.cols.size(); ++i) {
    const auto& meta = m.meta[i];
    if (meta.kind == 'b') val[i] = Rational(b[meta.index]);
    else if (meta.kind == 'c') val[i] = Rational(spA[meta.index]) * spA[meta.index];
    else val[i] = layers[meta.layer][meta.index];
  }
  for (std::size_t i = 0; i < m.cols.size(); ++i) {
    const auto& col = m.cols[i];
    if (col.free) continue;
    if (val[i] < col.lower) return false;
    if (col.upper && val[i] > *col.upper) return false;
  }
  for (const auto& row : m.rows) {
    Rational lhs = 0;
    for (const auto& [c, coef] : row.terms) lhs += coef * val[c];
    if (row.rel == Relation::Eq && lhs != row.rhs) return false;
    if (row.rel == Relation::Le && lhs > row.rhs) return false;
    if (row.rel == Relation::Ge && lhs < row.rhs) return false;
  }
  return true;
}

LpStats model_stats(const LpModel& model) {
  LpStats s;
  s.rows = static_cast<std::int64_t>(model.rows.size());
  s.vars = static_cast<std::int64_t>(model.cols.size());
  for (const auto& row : model.rows)
    s.nonzeros += static_cast<std::int64_t>(row.terms.size());
  return s;
}

}  // namespace f2tile
