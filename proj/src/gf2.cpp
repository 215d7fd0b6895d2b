#include "f2tile/gf2.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace f2tile {

Word reverse_bits(Word x, int n) {
  Word out = 0;
  for (int i = 0; i < n; ++i)
    if (x >> i & 1u) out |= 1u << (n - 1 - i);
  return out;
}

IntVec convolve(const IntVec& f, const IntVec& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("convolve: dimension mismatch");
  const Eigen::Index len = f.size();
  IntVec fh = f, gh = g;
  wht_in_place(fh);
  wht_in_place(gh);
  IntVec prod = fh * gh;
  wht_in_place(prod);
  return prod / len;  // exact: every entry divisible by 2^n
}

Region::Region(int n, std::vector<Word> members) : n_(n), members_(std::move(members)) {
  check_dim(n_);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Word w : members_)
    if (n_ < 32 && (w >> n_) != 0)
      throw std::invalid_argument("region member out of range for dimension " +
                                  std::to_string(n_));
}

bool Region::contains(Word w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

Region Region::translated(Word t) const {
  std::vector<Word> m;
  m.reserve(members_.size());
  for (Word w : members_) m.push_back(w ^ t);
  return Region(n_, std::move(m));
}

IntVec indicator(const Region& V) {
  IntVec f = IntVec::Zero(std::int64_t{1} << V.n());
  for (Word w : V.members()) f[w] = 1;
  return f;
}

IntVec spectrum(const Region& V) {
  IntVec f = indicator(V);
  wht_in_place(f);
  return f;
}

std::vector<Word> sumset_support(const Region& V) {
  std::unordered_set<Word> seen;
  const auto& m = V.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) seen.insert(m[i] ^ m[j]);
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> span_basis(const Region& V) {
  std::vector<Word> basis;  // echelon form, one leading bit each
  for (Word w : V.members()) {
    Word x = w;
    for (Word b : basis) x = std::min(x, x ^ b);
    if (x != 0) {
      basis.push_back(x);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return basis;
}

int span_dim(const Region& V) { return static_cast<int>(span_basis(V).size()); }

bool is_tile_pair(const Region& V, const Region& A) {
  if (V.n() != A.n()) throw std::invalid_argument("is_tile_pair: dimension mismatch");
  const int n = V.n();
  if (V.size() == 0 || A.size() == 0) return false;

  bool sumset_route;
  if (V.size() * A.size() != (std::int64_t{1} << n)) {
    sumset_route = false;
  } else {
    auto sv = sumset_support(V);
    const Region sa(n, sumset_support(A));
    sumset_route = std::none_of(sv.begin(), sv.end(),
                                [&](Word w) { return w != 0 && sa.contains(w); });
  }

  if (n <= 16) {
    IntVec conv = convolve(indicator(V), indicator(A));
    bool conv_route = (conv == 1).all();
    if (conv_route != sumset_route)
      throw std::logic_error("is_tile_pair: sumset and convolution routes disagree");
  }
  return sumset_route;
}

bool full_rank_test(const Region& A) {
  if (!A.contains(0))
    throw std::invalid_argument("full_rank_test: region must contain 0");
  IntVec sp = spectrum(A);
  const std::int64_t bound = A.size() - 2;
  for (Eigen::Index x = 1; x < sp.size(); ++x)
    if (sp[x] > bound || sp[x] < -bound) return false;
  return true;
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Region read_region(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Word> members;
  bool header_seen = false;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (!header_seen) {
      if (t.empty() || t[0] == '#') continue;
      if (t.rfind("n=", 0) != 0)
        throw std::runtime_error("region file: expected header n=<dim>");
      n = std::stoi(t.substr(2));
      check_dim(n);
      header_seen = true;
      continue;
    }
    if (!t.empty() && t[0] == '#') continue;
    if (t.empty()) {
      members.push_back(0);  // empty line = zero vector
      continue;
    }
    Word w = 0;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int i = std::stoi(strip(tok));
      if (i < 0 || i >= n)
        throw std::runtime_error("region file: coordinate " + std::to_string(i) +
                                 " out of range for n=" + std::to_string(n));
      w |= Word{1} << i;
    }
    members.push_back(w);
  }
  if (!header_seen) throw std::runtime_error("region file: missing header");
  return Region(n, std::move(members));
}

Region read_region_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open region file: " + path);
  return read_region(in);
}

void write_region(std::ostream& out, const Region& V) {
  out << "n=" << V.n() << "\n";
  for (Word w : V.members()) {
    bool first = true;
    for (int i = 0; i < V.n(); ++i) {
      if (w >> i & 1u) {
        if (!first) out << ",";
        out << i;
        first = false;
      }
    }
    out << "\n";
  }
}

}  // namespace f2tile
