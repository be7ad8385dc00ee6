#pragma once

// Seifert linking forms, Morita values of separating twists, and the
// cup-product pairing against simple abelian cycles. A full-rank pairing
// matrix between a family of cycles and a family of functionals certifies
// that the cycles are linearly independent over Z.

#include "torelli/splitting.hpp"
#include "torelli/symplectic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torelli {

/// Integer matrix L with L(u, v) = l(e_u, e_v) satisfying L^T - L = J.
class LinkingForm {
 public:
  /// Throws a precondition error if the Seifert relation fails.
  explicit LinkingForm(IntMatrix matrix);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t genus() const { return matrix_.rows() / 2; }

  /// x^T L y.
  Integer operator()(const HVector& x, const HVector& y) const;

  friend bool operator==(const LinkingForm&, const LinkingForm&) = default;

 private:
  IntMatrix matrix_;
};

bool satisfies_seifert_relation(const IntMatrix& l);

/// l(b_i, a_i) = 1 and every other basis value 0.
LinkingForm standard_linking_form(std::size_t genus = kDefaultGenus);

/// M^T L M, the form of the embedding precomposed with M.
LinkingForm pushforward(const LinkingForm& form, const IntMatrix& m);

/// The two symplectic matrices used to separate the twists of the standard
/// splitting: the first mixes the V1 handle with V2, the second the V3 handle.
IntMatrix psi1_matrix();
IntMatrix psi3_matrix();

/// l(a,a) l(b,b) - l(a,b) l(b,a) for a pair with a.b = 1.
Integer morita_twist_value(const LinkingForm& form, const HVector& a, const HVector& b);

/// Simple abelian cycle of a symmetric splitting: gamma bounds the V1 handle,
/// delta the V3 handle. Side pairs are oriented so that u.v = +1.
class CycleDescriptor {
 public:
  /// Throws a precondition error unless the splitting is symmetric.
  explicit CycleDescriptor(OrthogonalSplitting splitting);

  const OrthogonalSplitting& splitting() const { return splitting_; }
  const SummandBasis& gamma_side() const { return gamma_; }
  const SummandBasis& delta_side() const { return delta_; }

  /// The cycle of the reversed splitting (equal to minus this cycle).
  CycleDescriptor reversed() const;

 private:
  OrthogonalSplitting splitting_;
  SummandBasis gamma_;
  SummandBasis delta_;
};

/// -det [[l1(gamma), l1(delta)], [l2(gamma), l2(delta)]] with Morita values.
Integer cycle_pairing(const LinkingForm& l1, const LinkingForm& l2, const CycleDescriptor& cycle);

struct IndependenceCertificate {
  std::vector<CycleDescriptor> cycles;
  /// Functional pair k uses functionals[2k] and functionals[2k + 1].
  std::vector<IntMatrix> functionals;
  /// value_matrix(k, i): pairing of functional pair k with cycle i.
  IntMatrix value_matrix;
  std::size_t rank = 0;
};

using FunctionalPair = std::pair<IntMatrix, IntMatrix>;

/// Value matrix recomputed from stored cycles and functionals.
IntMatrix pairing_matrix(const std::vector<CycleDescriptor>& cycles,
                         const std::vector<IntMatrix>& functionals);

inline constexpr std::size_t kMaxSearchWordLength = 12;

/// Greedy search: hint pairs first, then seeded pairs of transvection words of
/// length at most 12; a pair is kept only if it raises the rank. `budget` caps
/// the number of candidate pairs evaluated. Throws not_found when exhausted.
IndependenceCertificate find_independence_certificate(
    const std::vector<CycleDescriptor>& cycles, std::uint64_t seed, std::size_t budget,
    const std::vector<FunctionalPair>& hints = {});

struct CertificateCheck {
  bool valid = false;
  std::string detail;
  std::size_t recomputed_rank = 0;
};

/// Replays a certificate from its stored data only: cycle validity and
/// distinctness, symplectic functionals, recomputed value matrix, and rank via
/// rational Gaussian elimination (a route separate from the search).
CertificateCheck verify_certificate(const IndependenceCertificate& certificate);

/// Rank over Q by Gaussian elimination on rationals.
std::size_t rational_rank(const IntMatrix& m);

}  // namespace torelli
