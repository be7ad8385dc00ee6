#pragma once

// Exact integer linear algebra on H = Z^{2g} with the standard intersection
// form. Coordinates are ordered (a1, b1, a2, b2, ..., ag, bg) everywhere, and
// matrices act on column coordinate vectors.

#include "torelli/integer.hpp"
#include "torelli/integer_matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace torelli {

inline constexpr std::size_t kDefaultGenus = 3;

class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<Integer> coords);
  HVector(std::initializer_list<long long> coords);

  static HVector zero(std::size_t genus);
  /// a_i and b_i for i in [1, genus].
  static HVector a(std::size_t i, std::size_t genus = kDefaultGenus);
  static HVector b(std::size_t i, std::size_t genus = kDefaultGenus);

  std::size_t size() const { return coords_.size(); }
  std::size_t genus() const { return coords_.size() / 2; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const;

  HVector operator-() const;
  friend HVector operator+(const HVector& x, const HVector& y);
  friend HVector operator-(const HVector& x, const HVector& y);
  friend HVector operator*(const Integer& k, const HVector& x);

  friend bool operator==(const HVector&, const HVector&) = default;
  /// Lexicographic on coordinates, then length.
  friend std::strong_ordering operator<=>(const HVector& x, const HVector& y);

 private:
  std::vector<Integer> coords_;
};

/// Block-diagonal J with g blocks [[0, 1], [-1, 0]].
IntMatrix intersection_matrix(std::size_t genus);

/// x^T J y. Throws a dimension error on length mismatch.
Integer intersection(const HVector& x, const HVector& y);

bool is_symplectic(const IntMatrix& m);

/// gcd of coordinates is 1; the zero vector is not primitive.
bool is_primitive(const HVector& x);

/// gcd of the coordinates (0 for the zero vector).
Integer content(const HVector& x);

/// Matrix of x -> x + exponent * (x . v) v. Throws a domain error for v = 0.
IntMatrix transvection(const HVector& v, const Integer& exponent = 1);

HVector apply(const IntMatrix& m, const HVector& x);

/// Inverse of a symplectic matrix, -J M^T J.
IntMatrix symplectic_inverse(const IntMatrix& m);

/// Deterministic product of `word_length` transvections (exponent +-1) on
/// primitive vectors with coordinates in [-2, 2].
IntMatrix random_sp_element(std::uint64_t seed, std::size_t word_length,
                            std::size_t genus = kDefaultGenus);

/// Rank-r sublattice of H given by a rationally independent basis.
class Sublattice {
 public:
  /// Throws a precondition error when the basis is dependent or ragged.
  explicit Sublattice(std::vector<HVector> basis);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_size() const { return ambient_; }
  const std::vector<HVector>& basis() const { return basis_; }
  const HVector& operator[](std::size_t i) const { return basis_[i]; }

  /// Basis vectors as rows.
  IntMatrix basis_matrix() const;
  /// Hermite normal form of the basis rows; a canonical encoding of the lattice.
  IntMatrix hermite_form() const;

  /// True iff every Smith invariant factor of the basis matrix is 1.
  bool is_direct_summand() const;

  bool contains(const HVector& x) const;

 private:
  std::vector<HVector> basis_;
  std::size_t ambient_ = 0;
};

}  // namespace torelli
