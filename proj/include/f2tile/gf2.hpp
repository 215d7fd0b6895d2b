#pragma once

// Region algebra over F_2^n: membership, sumsets, span, Walsh-Hadamard
// transform, convolution, tile-pair verification.  All arithmetic is exact
// integer; spectral values of 0/1 indicators fit in 64 bits for n <= 28.

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace f2tile {

// An element of F_2^n encoded as an n-bit index; coordinate i is bit i.
using Word = std::uint32_t;

template <class Scalar>
using Vec = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

using IntVec = Vec<std::int64_t>;

inline constexpr int kMaxDim = 28;

inline void check_dim(int n) {
  if (n < 0 || n > kMaxDim)
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxDim) + "]");
}

inline int parity(Word x) { return __builtin_parity(x); }

// Bit-reversal of the low n bits, used by the certificate verifier to probe
// the index convention of externally produced data.
Word reverse_bits(Word x, int n);

// In-place fast Walsh-Hadamard transform: f[y] <- sum_x (-1)^{x.y} f[x].
// Works for any exact scalar (int64, big rational).
template <class Scalar>
void wht_in_place(Vec<Scalar>& f) {
  const Eigen::Index len = f.size();
  for (Eigen::Index h = 1; h < len; h <<= 1) {
    for (Eigen::Index i = 0; i < len; i += h << 1) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        Scalar a = f[j];
        Scalar b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
    }
  }
}

template <class Scalar>
Vec<Scalar> wht(const Vec<Scalar>& f) {
  Vec<Scalar> out = f;
  wht_in_place(out);
  return out;
}

// Exact integer convolution over F_2^n: out[z] = sum_y f[y] g[z+y].
IntVec convolve(const IntVec& f, const IntVec& g);

// A finite subset of F_2^n.  Members are kept sorted and deduplicated.
class Region {
 public:
  Region() = default;
  Region(int n, std::vector<Word> members);

  int n() const { return n_; }
  const std::vector<Word>& members() const { return members_; }
  std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
  bool contains(Word w) const;

  Region translated(Word t) const;

 private:
  int n_ = 0;
  std::vector<Word> members_;
};

// 0/1 indicator of V as a length-2^n vector.
IntVec indicator(const Region& V);

// chi_V hat, the Walsh-Hadamard transform of the indicator.
IntVec spectrum(const Region& V);

// { v + v' : v, v' in V }, sorted.  Contains 0 whenever V is nonempty.
std::vector<Word> sumset_support(const Region& V);

// Rank over F_2 of the member words.
int span_dim(const Region& V);

// A basis (echelonized, descending leading bits) of <V>.
std::vector<Word> span_basis(const Region& V);

// True iff disjoint translates of V by A cover F_2^n exactly.  Checked by the
// sumset route ((V+V) cap (A+A) = {0} and |V||A| = 2^n) and, for n small
// enough to afford it, cross-checked against the convolution route.
bool is_tile_pair(const Region& V, const Region& A);

// True iff A (containing 0) spans F_2^n, decided spectrally:
// |chi_A hat(x)| <= |A|-2 for all x != 0.
bool full_rank_test(const Region& A);

// Text format shared by all tools: header "n=<dim>", then one vector per line
// as comma-separated coordinate indices of its 1-bits; an empty line is the
// zero vector.
Region read_region(std::istream& in);
Region read_region_file(const std::string& path);
void write_region(std::ostream& out, const Region& V);

}  // namespace f2tile
