#include "f2tile/lpmodel.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace f2tile {

namespace {

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  if (boost::multiprecision::denominator(r) == 1)
    os << boost::multiprecision::numerator(r);
  else
    os << r;
  return os.str();
}

Rational rat_parse(const std::string& tok) {
  auto slash = tok.find('/');
  using boost::multiprecision::mpz_int;
  if (slash == std::string::npos) return Rational(mpz_int(tok));
  return Rational(mpz_int(tok.substr(0, slash))) /
         Rational(mpz_int(tok.substr(slash + 1)));
}

// Rebuild the semantic tag from the fixed naming scheme.
ColMeta meta_from_name(const std::string& name) {
  ColMeta meta;
  if (name.rfind("b_", 0) == 0) {
    meta.kind = 'b';
    meta.index = static_cast<Word>(std::stoul(name.substr(2)));
  } else if (name.rfind("c_", 0) == 0) {
    meta.kind = 'c';
    meta.index = static_cast<Word>(std::stoul(name.substr(2)));
  } else if (name.rfind("t_", 0) == 0) {
    meta.kind = 't';
    auto mid = name.find('_', 2);
    meta.layer = std::stoi(name.substr(2, mid - 2));
    meta.index = static_cast<Word>(std::stoul(name.substr(mid + 1)));
  }
  return meta;
}

std::string write_lp_text(const LpModel& m, bool integerMarkers) {
  std::ostringstream os;
  os << "\\ f2tile feasibility model\n";
  os << "Minimize\n obj:\nSubject To\n";
  for (const auto& row : m.rows) {
    os << " " << row.name << ":";
    bool first = true;
    for (const auto& [c, coef] : row.terms) {
      Rational a = coef < 0 ? -coef : coef;
      if (first) {
        os << (coef < 0 ? " -" : " ") << rat_str(a);
        first = false;
      } else {
        os << (coef < 0 ? " - " : " + ") << rat_str(a);
      }
      os << " " << m.cols[c].name;
    }
    const char* rel = row.rel == Relation::Eq ? "=" : row.rel == Relation::Le ? "<=" : ">=";
    os << " " << rel << " " << rat_str(row.rhs) << "\n";
  }
  os << "Bounds\n";
  // Name order keeps the section stable across column-creation orders, so a
  // parse/re-export cycle is byte-identical.
  std::vector<const LpColumn*> ordered;
  ordered.reserve(m.cols.size());
  for (const auto& col : m.cols) ordered.push_back(&col);
  std::sort(ordered.begin(), ordered.end(),
            [](const LpColumn* a, const LpColumn* b) { return a->name < b->name; });
  for (const LpColumn* colp : ordered) {
    const auto& col = *colp;
    if (col.free) {
      os << " " << col.name << " free\n";
    } else if (col.upper) {
      os << " " << rat_str(col.lower) << " <= " << col.name << " <= "
         << rat_str(*col.upper) << "\n";
    } else {
      os << " " << col.name << " >= " << rat_str(col.lower) << "\n";
    }
  }
  if (integerMarkers) {
    os << "General\n";
    for (const auto& col : m.cols)
      if (col.integral) os << " " << col.name << "\n";
  }
  os << "End\n";
  return os.str();
}

std::string write_free_mps(const LpModel& m, bool integerMarkers) {
  std::ostringstream os;
  os << "NAME f2tile\n";
  os << "ROWS\n N obj\n";
  for (const auto& row : m.rows) {
    const char* kind = row.rel == Relation::Eq ? "E" : row.rel == Relation::Le ? "L" : "G";
    os << " " << kind << " " << row.name << "\n";
  }
  // COLUMNS grouped by column in model order.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> byCol(m.cols.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (const auto& [c, coef] : m.rows[r].terms)
      byCol[c].emplace_back(r, coef);
  os << "COLUMNS\n";
  bool inInt = false;
  int markerId = 0;
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    if (integerMarkers && m.cols[c].integral != inInt) {
      inInt = m.cols[c].integral;
      os << " M" << markerId++ << " 'MARKER' "
         << (inInt ? "'INTORG'" : "'INTEND'") << "\n";
    }
    for (const auto& [r, coef] : byCol[c])
      os << " " << m.cols[c].name << " " << m.rows[r].name << " "
         << rat_str(coef) << "\n";
  }
  if (integerMarkers && inInt)
    os << " M" << markerId++ << " 'MARKER' 'INTEND'\n";
  os << "RHS\n";
  for (const auto& row : m.rows)
    if (row.rhs != 0) os << " rhs " << row.name << " " << rat_str(row.rhs) << "\n";
  os << "BOUNDS\n";
  for (const auto& col : m.cols) {
    if (col.free) {
      os << " FR bnd " << col.name << "\n";
    } else {
      if (col.lower != 0)
        os << " LO bnd " << col.name << " " << rat_str(col.lower) << "\n";
      if (col.upper)
        os << " UP bnd " << col.name << " " << rat_str(*col.upper) << "\n";
    }
  }
  os << "ENDATA\n";
  return os.str();
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

struct Builder {
  LpModel m;
  std::map<std::string, int> colIdx;
  std::map<std::string, int> rowIdx;

  int col(const std::string& name) {
    auto it = colIdx.find(name);
    if (it != colIdx.end()) return it->second;
    int idx = static_cast<int>(m.cols.size());
    m.cols.push_back({name, 0, std::nullopt, false, false});
    m.meta.push_back(meta_from_name(name));
    colIdx.emplace(name, idx);
    return idx;
  }
  int row(const std::string& name) {
    auto it = rowIdx.find(name);
    if (it != rowIdx.end()) return it->second;
    int idx = static_cast<int>(m.rows.size());
    m.rows.push_back({name, Relation::Eq, 0, {}});
    rowIdx.emplace(name, idx);
    return idx;
  }
};

LpModel parse_lp_text(const std::string& text) {
  Builder b;
  std::istringstream in(text);
  std::string line;
  enum { None, Obj, Rows, Bounds, General } section = None;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    std::string trimmed = line.substr(line.find_first_not_of(" \t"));
    if (trimmed == "Minimize") { section = Obj; continue; }
    if (trimmed == "Subject To") { section = Rows; continue; }
    if (trimmed == "Bounds") { section = Bounds; continue; }
    if (trimmed == "General") { section = General; continue; }
    if (trimmed == "End") break;
    auto toks = tokens_of(trimmed);
    if (toks.empty() || section == Obj) continue;
    if (section == Rows) {
      if (toks[0].back() != ':')
        throw std::runtime_error("lp parse: missing row name in '" + line + "'");
      int r = b.row(toks[0].substr(0, toks[0].size() - 1));
      auto& row = b.m.rows[r];
      std::size_t i = 1;
      int sign = 1;
      while (i < toks.size()) {
        const std::string& t = toks[i];
        if (t == "=" || t == "<=" || t == ">=") {
          row.rel = t == "=" ? Relation::Eq : t == "<=" ? Relation::Le : Relation::Ge;
          row.rhs = rat_parse(toks.at(i + 1));
          break;
        }
        if (t == "+") { sign = 1; ++i; continue; }
        if (t == "-") { sign = -1; ++i; continue; }
        Rational coef = rat_parse(t) * sign;
        sign = 1;
        row.terms.emplace_back(b.col(toks.at(i + 1)), coef);
        i += 2;
      }
    } else if (section == Bounds) {
      if (toks.size() == 2 && toks[1] == "free") {
        b.m.cols[b.col(toks[0])].free = true;
      } else if (toks.size() == 5 && toks[1] == "<=" && toks[3] == "<=") {
        auto& col = b.m.cols[b.col(toks[2])];
        col.lower = rat_parse(toks[0]);
        col.upper = rat_parse(toks[4]);
      } else if (toks.size() == 3 && toks[1] == ">=") {
        b.m.cols[b.col(toks[0])].lower = rat_parse(toks[2]);
      } else {
        throw std::runtime_error("lp parse: bad bound '" + line + "'");
      }
    } else if (section == General) {
      b.m.cols[b.col(toks[0])].integral = true;
    }
  }
  return std::move(b.m);
}

LpModel parse_free_mps(const std::string& text) {
  Builder b;
  std::istringstream in(text);
  std::string line;
  enum { None, Rows, Cols, Rhs, Bounds } section = None;
  bool inInt = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks[0] == "NAME") continue;
    if (toks[0] == "ROWS") { section = Rows; continue; }
    if (toks[0] == "COLUMNS") { section = Cols; continue; }
    if (toks[0] == "RHS") { section = Rhs; continue; }
    if (toks[0] == "RANGES") { section = None; continue; }
    if (toks[0] == "BOUNDS") { section = Bounds; continue; }
    if (toks[0] == "ENDATA") break;
    if (section == Rows) {
      if (toks[0] == "N") continue;  // objective row
      int r = b.row(toks.at(1));
      b.m.rows[r].rel = toks[0] == "E"   ? Relation::Eq
                        : toks[0] == "L" ? Relation::Le
                                         : Relation::Ge;
    } else if (section == Cols) {
      if (toks.size() >= 3 && toks[1] == "'MARKER'") {
        inInt = toks[2] == "'INTORG'";
        continue;
      }
      int c = b.col(toks[0]);
      b.m.cols[c].integral = inInt;
      for (std::size_t i = 1; i + 1 < toks.size(); i += 2) {
        int r = b.row(toks[i]);
        b.m.rows[r].terms.emplace_back(c, rat_parse(toks[i + 1]));
      }
    } else if (section == Rhs) {
      b.m.rows[b.row(toks.at(1))].rhs = rat_parse(toks.at(2));
    } else if (section == Bounds) {
      if (toks[0] == "FR") {
        b.m.cols[b.col(toks.at(2))].free = true;
      } else if (toks[0] == "UP") {
        b.m.cols[b.col(toks.at(2))].upper = rat_parse(toks.at(3));
      } else if (toks[0] == "LO") {
        b.m.cols[b.col(toks.at(2))].lower = rat_parse(toks.at(3));
      } else {
        throw std::runtime_error("mps parse: unsupported bound '" + line + "'");
      }
    }
  }
  return std::move(b.m);
}

}  // namespace

std::string export_lp(const LpModel& model, LpFormat format, bool integerMarkers) {
  return format == LpFormat::LpText ? write_lp_text(model, integerMarkers)
                                    : write_free_mps(model, integerMarkers);
}

LpModel parse_lp(const std::string& text, LpFormat format) {
  return format == LpFormat::LpText ? parse_lp_text(text) : parse_free_mps(text);
}

}  // namespace f2tile
