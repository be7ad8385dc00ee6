#pragma once

// Orthogonal splittings H = V1 + V2 + V3 of the genus-3 lattice. A simple
// abelian cycle is described entirely by its splitting, so splittings double
// as cycle descriptors throughout the library.

#include "torelli/quadratic_form.hpp"
#include "torelli/symplectic.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace torelli {

/// Ordered basis pair of a rank-2 summand.
struct SummandBasis {
  HVector u;
  HVector v;

  Sublattice lattice() const { return Sublattice({u, v}); }
  friend bool operator==(const SummandBasis&, const SummandBasis&) = default;
};

class OrthogonalSplitting {
 public:
  /// Validates every splitting invariant; throws a precondition error otherwise.
  OrthogonalSplitting(SummandBasis v1, SummandBasis v2, SummandBasis v3);

  static OrthogonalSplitting standard();

  const SummandBasis& operator[](std::size_t j) const { return summands_[j]; }
  const std::array<SummandBasis, 3>& summands() const { return summands_; }

  /// (V3, V2, V1).
  OrthogonalSplitting reversed() const;

  friend bool operator==(const OrthogonalSplitting&, const OrthogonalSplitting&) = default;

 private:
  std::array<SummandBasis, 3> summands_;
};

/// Pairwise orthogonal, unimodular summands spanning H. Throws a precondition
/// error when a summand does not have rank 2.
bool is_orthogonal_splitting(const Sublattice& v1, const Sublattice& v2, const Sublattice& v3);

/// Arf invariants of the form restricted to V1, V2, V3.
std::array<std::uint8_t, 3> arf_pattern(const OrthogonalSplitting& s,
                                        const SpQuadraticForm& form = reference_form());

/// Arf pattern (1, 0, 1) for the reference form.
bool is_symmetric_splitting(const OrthogonalSplitting& s,
                            const SpQuadraticForm& form = reference_form());

/// Canonical representative of {S, reversed S}: every summand basis replaced
/// by its Hermite normal form, outer summands ordered so the Hermite form of
/// V1 is lexicographically smaller than that of V3. The sign is -1 exactly
/// when the outer summands were exchanged.
std::pair<OrthogonalSplitting, int> canonical_form(const OrthogonalSplitting& s);

/// Hermite forms of (V1, V2, V3) after canonical ordering; equal keys mean the
/// same unordered splitting.
std::array<IntMatrix, 3> unordered_key(const OrthogonalSplitting& s);

/// Unique components (x1, x2, x3) with x_j in V_j and x = x1 + x2 + x3.
std::array<HVector, 3> project(const HVector& x, const OrthogonalSplitting& s);

struct GenericDecomposition {
  std::array<HVector, 3> components;
  std::array<Integer, 3> multiplicities;  // positive
  std::array<HVector, 3> primitive_parts;
};

struct GenericClass {
  HVector x;
  std::vector<GenericDecomposition> decompositions;  // one per splitting
};

/// Checks the generic-class conditions for a candidate x: all components
/// nonzero, component multisets pairwise distinct, and primitive-part multisets
/// pairwise distinct. Returns the decompositions when x qualifies.
std::optional<GenericClass> check_generic_class(const std::vector<OrthogonalSplitting>& family,
                                                const HVector& x);

inline constexpr std::int64_t kDefaultCoordinateBound = 5;

/// First qualifying primitive x with coordinates in [-bound, bound], scanned in
/// a seeded pseudo-random order. Throws not_found when the box is exhausted.
GenericClass choose_generic_class(const std::vector<OrthogonalSplitting>& family,
                                  std::uint64_t seed,
                                  std::int64_t coordinate_bound = kDefaultCoordinateBound);

/// Image of the standard splitting under a seeded random symplectic matrix,
/// retrying derived seeds until the image is symmetric.
OrthogonalSplitting random_symmetric_splitting(std::uint64_t seed, std::size_t word_length = 4);

/// `count` symmetric splittings, pairwise distinct as unordered splittings.
std::vector<OrthogonalSplitting> seeded_symmetric_family(std::size_t count, std::uint64_t seed,
                                                         std::size_t word_length = 4);

OrthogonalSplitting apply(const IntMatrix& m, const OrthogonalSplitting& s);

/// Middle-summand normalization: given a pair (u, v) of a summand with u.v = 1
/// and form values not both 1, returns (u'', v'') spanning the same summand
/// with values (0, 1).
SummandBasis normalize_middle(const SpQuadraticForm& form, const SummandBasis& pair);

}  // namespace torelli
