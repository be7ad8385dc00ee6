#include "torelli/symplectic.hpp"

#include "torelli/error.hpp"
#include "torelli/rng.hpp"

#include <string>

namespace torelli {

HVector::HVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

HVector::HVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

HVector HVector::zero(std::size_t genus) {
  return HVector(std::vector<Integer>(2 * genus));
}

HVector HVector::a(std::size_t i, std::size_t genus) {
  require(i >= 1 && i <= genus, ErrorKind::dimension, "handle index out of range");
  HVector v = zero(genus);
  v.coords_[2 * (i - 1)] = 1;
  return v;
}

HVector HVector::b(std::size_t i, std::size_t genus) {
  require(i >= 1 && i <= genus, ErrorKind::dimension, "handle index out of range");
  HVector v = zero(genus);
  v.coords_[2 * (i - 1) + 1] = 1;
  return v;
}

bool HVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

HVector HVector::operator-() const {
  HVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

HVector operator+(const HVector& x, const HVector& y) {
  require(x.size() == y.size(), ErrorKind::dimension, "vector length mismatch");
  HVector out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out.coords_[i] += y.coords_[i];
  return out;
}

HVector operator-(const HVector& x, const HVector& y) { return x + (-y); }

HVector operator*(const Integer& k, const HVector& x) {
  HVector out = x;
  for (auto& c : out.coords_) c *= k;
  return out;
}

std::strong_ordering operator<=>(const HVector& x, const HVector& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] != y[i]) return x[i] < y[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
  }
  return x.size() <=> y.size();
}

IntMatrix intersection_matrix(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Integer intersection(const HVector& x, const HVector& y) {
  require(x.size() == y.size() && x.size() % 2 == 0, ErrorKind::dimension,
          "intersection: vectors of lengths " + std::to_string(x.size()) + " and " +
              std::to_string(y.size()));
  Integer total = 0;
  for (std::size_t i = 0; i < x.size(); i += 2) {
    total += x[i] * y[i + 1] - x[i + 1] * y[i];
  }
  return total;
}

bool is_symplectic(const IntMatrix& m) {
  require(m.square(), ErrorKind::dimension, "is_symplectic: matrix is not square");
  if (m.rows() % 2 != 0) return false;
  const IntMatrix j = intersection_matrix(m.rows() / 2);
  return m.transpose() * j * m == j;
}

Integer content(const HVector& x) {
  Integer g = 0;
  for (std::size_t i = 0; i < x.size(); ++i) g = gcd(g, x[i]);
  return g;
}

bool is_primitive(const HVector& x) { return content(x) == 1; }

IntMatrix transvection(const HVector& v, const Integer& exponent) {
  require(!v.is_zero(), ErrorKind::domain, "transvection along the zero vector");
  const std::size_t n = v.size();
  IntMatrix m = IntMatrix::identity(n);
  // Column j is the image of e_j: e_j + k (e_j . v) v.
  for (std::size_t j = 0; j < n; ++j) {
    // e_j . v for the standard form: e_{a_i} . v = v_{b_i}, e_{b_i} . v = -v_{a_i}
    const Integer pairing = (j % 2 == 0) ? v[j + 1] : Integer(-v[j - 1]);
    if (pairing == 0) continue;
    for (std::size_t i = 0; i < n; ++i) m(i, j) += exponent * pairing * v[i];
  }
  return m;
}

HVector apply(const IntMatrix& m, const HVector& x) {
  return HVector(m * x.coords());
}

IntMatrix symplectic_inverse(const IntMatrix& m) {
  require(m.square() && m.rows() % 2 == 0, ErrorKind::dimension,
          "symplectic_inverse: bad shape");
  const IntMatrix j = intersection_matrix(m.rows() / 2);
  IntMatrix inv = j * m.transpose() * j;
  for (std::size_t r = 0; r < inv.rows(); ++r)
    for (std::size_t c = 0; c < inv.cols(); ++c) inv(r, c) = -inv(r, c);
  return inv;
}

IntMatrix random_sp_element(std::uint64_t seed, std::size_t word_length,
                            std::size_t genus) {
  SeededRng rng(seed);
  IntMatrix m = IntMatrix::identity(2 * genus);
  for (std::size_t step = 0; step < word_length; ++step) {
    std::vector<Integer> coords(2 * genus);
    HVector v;
    do {
      for (auto& c : coords) c = rng.uniform(-2, 2);
      v = HVector(coords);
    } while (!is_primitive(v));
    const Integer exponent = rng.coin() ? 1 : -1;
    m = transvection(v, exponent) * m;
  }
  return m;
}

Sublattice::Sublattice(std::vector<HVector> basis) : basis_(std::move(basis)) {
  require(!basis_.empty(), ErrorKind::precondition, "sublattice needs a basis");
  ambient_ = basis_.front().size();
  for (const auto& v : basis_)
    require(v.size() == ambient_, ErrorKind::dimension, "sublattice basis is ragged");
  require(torelli::rank(basis_matrix()) == basis_.size(), ErrorKind::precondition,
          "sublattice basis is linearly dependent");
}

IntMatrix Sublattice::basis_matrix() const {
  IntMatrix m(basis_.size(), ambient_);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m(r, c) = basis_[r][c];
  return m;
}

IntMatrix Sublattice::hermite_form() const { return hermite_normal_form(basis_matrix()); }

bool Sublattice::is_direct_summand() const {
  for (const auto& d : smith_invariants(basis_matrix()))
    if (d != 1) return false;
  return true;
}

bool Sublattice::contains(const HVector& x) const {
  require(x.size() == ambient_, ErrorKind::dimension, "contains: length mismatch");
  IntMatrix with = basis_matrix();
  IntMatrix extended(with.rows() + 1, ambient_);
  for (std::size_t r = 0; r < with.rows(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) extended(r, c) = with(r, c);
  for (std::size_t c = 0; c < ambient_; ++c) extended(with.rows(), c) = x[c];
  // Integral membership: same HNF with and without x.
  return hermite_normal_form(extended) == hermite_form();
}

}  // namespace torelli
