#include "torelli/quadratic_form.hpp"

#include "torelli/error.hpp"

#include <string>

namespace torelli {

SpQuadraticForm::SpQuadraticForm(std::vector<std::uint8_t> basis_values)
    : values_(std::move(basis_values)) {
  require(!values_.empty() && values_.size() % 2 == 0, ErrorKind::dimension,
          "form needs 2g basis values");
  for (auto v : values_)
    require(v <= 1, ErrorKind::domain, "form values must be bits");
}

SpQuadraticForm SpQuadraticForm::from_bits(std::size_t genus, std::uint64_t bits) {
  std::vector<std::uint8_t> values(2 * genus);
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = (bits >> k) & 1u;
  return SpQuadraticForm(std::move(values));
}

std::uint64_t SpQuadraticForm::bits() const {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < values_.size(); ++k)
    out |= static_cast<std::uint64_t>(values_[k]) << k;
  return out;
}

SpQuadraticForm reference_form() {
  return checked_reference(SpQuadraticForm({1, 1, 0, 1, 1, 1}));
}

SpQuadraticForm checked_reference(SpQuadraticForm form) {
  require(arf(form) == 0, ErrorKind::precondition, "reference form must have Arf 0");
  return form;
}

std::uint8_t evaluate(const SpQuadraticForm& form, const HVector& x) {
  require(x.size() == form.basis_values().size(), ErrorKind::dimension,
          "evaluate: vector length does not match form genus");
  // sum c_i omega(e_i) + sum_{i<j} c_i c_j (e_i . e_j); only a_k . b_k is odd.
  unsigned total = 0;
  for (std::size_t k = 0; k < x.size(); ++k) total += parity(x[k]) & form.basis_values()[k];
  for (std::size_t k = 0; k < x.size(); k += 2) total += parity(x[k]) & parity(x[k + 1]);
  return total & 1u;
}

std::uint8_t arf(const SpQuadraticForm& form) {
  unsigned total = 0;
  for (std::size_t i = 1; i <= form.genus(); ++i) total += form.value_a(i) & form.value_b(i);
  return total & 1u;
}

std::uint8_t arf(const SpQuadraticForm& form, const std::vector<HVector>& basis) {
  require(basis.size() == form.basis_values().size(), ErrorKind::precondition,
          "arf: basis must have 2g vectors");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const bool paired = (i % 2 == 0) && (j == i + 1);
      require(intersection(basis[i], basis[j]) == (paired ? 1 : 0),
              ErrorKind::precondition, "arf: basis is not symplectic");
    }
  unsigned total = 0;
  for (std::size_t i = 0; i < basis.size(); i += 2)
    total += evaluate(form, basis[i]) & evaluate(form, basis[i + 1]);
  return total & 1u;
}

std::vector<SpQuadraticForm> enumerate_forms(std::size_t genus, std::uint8_t arf_value) {
  require(genus >= 1, ErrorKind::domain, "enumerate_forms: genus must be positive");
  require(genus <= 8, ErrorKind::resource,
          "enumerate_forms: genus " + std::to_string(genus) + " is too large to enumerate");
  require(arf_value <= 1, ErrorKind::domain, "enumerate_forms: arf must be a bit");
  std::vector<SpQuadraticForm> out;
  const std::uint64_t count = std::uint64_t{1} << (2 * genus);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    auto form = SpQuadraticForm::from_bits(genus, bits);
    if (arf(form) == arf_value) out.push_back(std::move(form));
  }
  return out;
}

SpQuadraticForm restrict(const SpQuadraticForm& form, const Sublattice& summand) {
  require(summand.rank() == 2, ErrorKind::precondition, "restrict: summand must have rank 2");
  const Integer pairing = intersection(summand[0], summand[1]);
  require(pairing == 1 || pairing == -1, ErrorKind::precondition,
          "restrict: basis pair must have intersection +-1");
  return SpQuadraticForm({evaluate(form, summand[0]), evaluate(form, summand[1])});
}

std::uint8_t birman_craggs_involution_value(const SpQuadraticForm& form) {
  require(form.genus() == 3, ErrorKind::precondition,
          "involution value is defined for genus 3");
  require(arf(form) == 0, ErrorKind::precondition,
          "involution value requires a form with Arf invariant 0");
  return form.value_a(1) & form.value_b(1) & (form.value_a(2) ^ 1u) & form.value_b(2);
}

std::uint8_t birman_craggs_pairwise_sum(const SpQuadraticForm& form) {
  unsigned total = 0;
  for (std::size_t i = 1; i <= form.genus(); ++i)
    for (std::size_t j = i + 1; j <= form.genus(); ++j)
      total += form.value_a(i) & form.value_b(i) & (form.value_a(j) ^ 1u) & form.value_b(j);
  return total & 1u;
}

std::uint8_t polarized_value(std::uint8_t u_value, std::uint8_t v_value, const Integer& m,
                             const Integer& n) {
  return ((parity(m) & u_value) ^ (parity(n) & v_value) ^ (parity(m) & parity(n))) & 1u;
}

}  // namespace torelli
