#pragma once

#include "torelli/symplectic.hpp"

#include <cstdint>
#include <vector>

namespace torelli {

/// Z/2-valued quadratic refinement of the mod-2 intersection form, stored by
/// its values on the standard basis (a1, b1, ..., ag, bg).
class SpQuadraticForm {
 public:
  explicit SpQuadraticForm(std::vector<std::uint8_t> basis_values);

  /// Bit k of `bits` is the value on the k-th standard basis vector.
  static SpQuadraticForm from_bits(std::size_t genus, std::uint64_t bits);

  std::size_t genus() const { return values_.size() / 2; }
  const std::vector<std::uint8_t>& basis_values() const { return values_; }
  std::uint8_t value_a(std::size_t i) const { return values_[2 * (i - 1)]; }
  std::uint8_t value_b(std::size_t i) const { return values_[2 * (i - 1) + 1]; }
  std::uint64_t bits() const;

  friend bool operator==(const SpQuadraticForm&, const SpQuadraticForm&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

/// omega_0: value 1 on a1, b1, b2, a3, b3 and 0 on a2.
SpQuadraticForm reference_form();

/// Throws a precondition error unless arf(form) == 0; returns the form.
SpQuadraticForm checked_reference(SpQuadraticForm form);

std::uint8_t evaluate(const SpQuadraticForm& form, const HVector& x);

/// Arf invariant on the standard basis.
std::uint8_t arf(const SpQuadraticForm& form);

/// Arf invariant computed on a symplectic basis (x1, y1, ..., xg, yg).
/// Throws a precondition error if the basis is not symplectic.
std::uint8_t arf(const SpQuadraticForm& form, const std::vector<HVector>& basis);

/// All forms of the given genus with the given Arf value, ascending by bits().
std::vector<SpQuadraticForm> enumerate_forms(std::size_t genus, std::uint8_t arf_value);

/// Genus-one form (omega(u), omega(v)) on a rank-2 sublattice with u.v = +-1.
SpQuadraticForm restrict(const SpQuadraticForm& form, const Sublattice& summand);

/// rho_omega(s) = omega(a1) omega(b1) (omega(a2) + 1) omega(b2) mod 2 for the
/// genus-3 hyperelliptic involution. Requires arf(form) == 0.
std::uint8_t birman_craggs_involution_value(const SpQuadraticForm& form);

/// The unreduced pairwise sum
///   sum_{i<j} omega(a_i) omega(b_i) (omega(a_j) + 1) omega(b_j)
/// which collapses to the single-term value when the Arf invariant vanishes.
std::uint8_t birman_craggs_pairwise_sum(const SpQuadraticForm& form);

/// Value of m u + n v under a form taking values (u_value, v_value) on a pair
/// with odd intersection, by polarization.
std::uint8_t polarized_value(std::uint8_t u_value, std::uint8_t v_value,
                             const Integer& m, const Integer& n);

}  // namespace torelli
