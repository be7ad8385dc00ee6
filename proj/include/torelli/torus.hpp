#pragma once

// Lattice lines on the torus R^2 / 2Z^2 with the involution
// (x, y) -> (2 - x, 2 - y) and marked points p = (1, 1), q = (1, 0).
// Homology classes are written in the basis e1 = (2, 0), e2 = (0, 2); the
// quadratic form nu has nu(e1) = 0, nu(e2) = 1.

#include <array>
#include <cstdint>
#include <utility>

namespace torelli::torus {

struct Point {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const Point&, const Point&) = default;
};

inline constexpr Point kP{1, 1};
inline constexpr Point kQ{1, 0};

struct HomologyClass {
  std::int64_t m;  // coefficient of e1
  std::int64_t n;  // coefficient of e2
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

/// The curve {a x + b y + c = 0 mod 2} with gcd(a, b) = 1. The constant is
/// kept as twice its value, c2 = 2c in [0, 4), since c is only defined mod 2
/// and takes half-integer values for the non-invariant pairs.
class LatticeLine {
 public:
  LatticeLine(std::int64_t a, std::int64_t b, std::int64_t twice_c);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t twice_c() const { return c2_; }

  /// Realized class +(b, -a); the orientation is a fixed convention.
  HomologyClass realized_class() const { return {b_, -a_}; }

  /// a px + b py + c evaluated in half units, reduced mod 4.
  std::int64_t twice_value_at(Point pt) const;
  bool passes_through(Point pt) const { return twice_value_at(pt) == 0; }

  /// Same point set (the triple (-a, -b, -c) describes the same curve).
  bool same_curve(const LatticeLine& other) const;

  friend bool operator==(const LatticeLine&, const LatticeLine&) = default;

 private:
  std::int64_t a_, b_, c2_;
};

std::uint8_t nu(HomologyClass w);
bool is_primitive(HomologyClass w);

LatticeLine involution_image(const LatticeLine& line);
bool is_involution_invariant(const LatticeLine& line);

/// Parallel lines with different constants are disjoint.
bool disjoint(const LatticeLine& l1, const LatticeLine& l2);

/// For disjoint parallel lines: how many of `points` fall in each of the two
/// complementary annuli. Throws a precondition error if a point lies on a line
/// or the lines are not disjoint parallels.
std::array<int, 2> annulus_occupancy(const LatticeLine& l1, const LatticeLine& l2,
                                     const std::array<Point, 2>& points);

/// Disjoint parallel curves are isotopic in the marked complement iff one of
/// the complementary annuli contains no marked point.
bool isotopic_in_complement(const LatticeLine& l1, const LatticeLine& l2,
                            const std::array<Point, 2>& points);

/// Invariant line avoiding p: c = 0 when a + b is odd, c = 1 otherwise.
LatticeLine realize_symmetric(HomologyClass w);

/// Invariant line (c = 0) avoiding p and q. Requires nu(w) = 1.
LatticeLine realize_nu1(HomologyClass w);

/// Lines with c = 1/2 and c = 3/2, swapped by the involution. Requires nu(w) = 0.
std::pair<LatticeLine, LatticeLine> realize_nu0_pair(HomologyClass w);

/// Matrix route for the nu = 0 case: a completion A = [w z] in SL(2, Z) whose
/// reduction mod 2 is one of I, [[1,1],[0,1]], [[1,0],[1,1]], together with
/// A^{-1}(p), A^{-1}(q) mod 2.
struct Nu0Witness {
  std::array<std::int64_t, 4> matrix;      // A, row-major
  std::array<std::uint8_t, 4> matrix_mod2;  // A mod 2, row-major
  std::array<Point, 2> moved_points;        // A^{-1}(p), A^{-1}(q) in [0, 2)^2
};
Nu0Witness nu0_witness(HomologyClass w);

/// Change of basis making a genus-one pair's form values (0, 1).
/// (u'', v'') = (u, v) * transform, i.e. u'' = t00 u + t10 v, v'' = t01 u + t11 v.
struct MiddleBasisNormalization {
  int case_number;                        // 1: (0,0), 2: (0,1), 3: (1,0)
  std::array<std::int64_t, 4> transform;  // row-major, determinant 1
  std::array<std::uint8_t, 2> values;     // values on (u'', v'')
};

/// Requires (u_value, v_value) != (1, 1).
MiddleBasisNormalization normalize_middle_basis(std::uint8_t u_value, std::uint8_t v_value);

}  // namespace torelli::torus
