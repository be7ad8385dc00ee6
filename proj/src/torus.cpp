#include "torelli/torus.hpp"

#include "torelli/error.hpp"
#include "torelli/quadratic_form.hpp"

#include <numeric>
#include <string>

namespace torelli::torus {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::string describe(HomologyClass w) {
  return "(" + std::to_string(w.m) + ", " + std::to_string(w.n) + ")";
}

// Second line rewritten with the same (a, b) as the first; requires parallel lines.
std::int64_t aligned_twice_c(const LatticeLine& l1, const LatticeLine& l2) {
  if (l2.a() == l1.a() && l2.b() == l1.b()) return l2.twice_c();
  require(l2.a() == -l1.a() && l2.b() == -l1.b(), ErrorKind::precondition,
          "lines are not parallel");
  return mod(-l2.twice_c(), 4);
}

}  // namespace

LatticeLine::LatticeLine(std::int64_t a, std::int64_t b, std::int64_t twice_c)
    : a_(a), b_(b), c2_(mod(twice_c, 4)) {
  require(std::gcd(a, b) == 1, ErrorKind::precondition, "line coefficients must be coprime");
}

std::int64_t LatticeLine::twice_value_at(Point pt) const {
  return mod(2 * (a_ * pt.x + b_ * pt.y) + c2_, 4);
}

bool LatticeLine::same_curve(const LatticeLine& other) const {
  if (other.a_ == a_ && other.b_ == b_) return other.c2_ == c2_;
  if (other.a_ == -a_ && other.b_ == -b_) return mod(-other.c2_, 4) == c2_;
  return false;
}

std::uint8_t nu(HomologyClass w) { return torelli::polarized_value(0, 1, w.m, w.n); }

bool is_primitive(HomologyClass w) { return std::gcd(w.m, w.n) == 1; }

LatticeLine involution_image(const LatticeLine& line) {
  // a(2 - x) + b(2 - y) + c = -(a x + b y - c) + 2(a + b), and 2(a + b) = 0 mod 2.
  return LatticeLine(line.a(), line.b(), -line.twice_c());
}

bool is_involution_invariant(const LatticeLine& line) {
  return involution_image(line).same_curve(line);
}

bool disjoint(const LatticeLine& l1, const LatticeLine& l2) {
  if (!((l1.a() == l2.a() && l1.b() == l2.b()) || (l1.a() == -l2.a() && l1.b() == -l2.b())))
    return false;
  return aligned_twice_c(l1, l2) != l1.twice_c();
}

std::array<int, 2> annulus_occupancy(const LatticeLine& l1, const LatticeLine& l2,
                                     const std::array<Point, 2>& points) {
  require(disjoint(l1, l2), ErrorKind::precondition, "annuli need disjoint parallel lines");
  // Position along the transverse circle R/2Z in half units: T = 2(a x + b y).
  // Line k sits at T = -c2_k; the annuli are the two open arcs between them.
  const std::int64_t start = mod(-l1.twice_c(), 4);
  const std::int64_t span = mod(-aligned_twice_c(l1, l2) - start, 4);
  std::array<int, 2> counts{0, 0};
  for (const Point& pt : points) {
    const std::int64_t t = mod(2 * (l1.a() * pt.x + l1.b() * pt.y) - start, 4);
    require(t != 0 && t != span, ErrorKind::precondition, "marked point lies on a line");
    ++counts[t < span ? 0 : 1];
  }
  return counts;
}

bool isotopic_in_complement(const LatticeLine& l1, const LatticeLine& l2,
                            const std::array<Point, 2>& points) {
  const auto counts = annulus_occupancy(l1, l2, points);
  return counts[0] == 0 || counts[1] == 0;
}

LatticeLine realize_symmetric(HomologyClass w) {
  require(is_primitive(w), ErrorKind::precondition, "class " + describe(w) + " is not primitive");
  const std::int64_t a = -w.n;
  const std::int64_t b = w.m;
  const bool odd = mod(a + b, 2) == 1;
  return LatticeLine(a, b, odd ? 0 : 2);
}

LatticeLine realize_nu1(HomologyClass w) {
  require(is_primitive(w), ErrorKind::precondition, "class " + describe(w) + " is not primitive");
  require(nu(w) == 1, ErrorKind::precondition, "class " + describe(w) + " has nu = 0");
  return LatticeLine(-w.n, w.m, 0);
}

std::pair<LatticeLine, LatticeLine> realize_nu0_pair(HomologyClass w) {
  require(is_primitive(w), ErrorKind::precondition, "class " + describe(w) + " is not primitive");
  require(nu(w) == 0, ErrorKind::precondition, "class " + describe(w) + " has nu = 1");
  return {LatticeLine(-w.n, w.m, 1), LatticeLine(-w.n, w.m, 3)};
}

Nu0Witness nu0_witness(HomologyClass w) {
  require(is_primitive(w), ErrorKind::precondition, "class " + describe(w) + " is not primitive");
  require(nu(w) == 0, ErrorKind::precondition, "class " + describe(w) + " has nu = 1");
  // Extended Euclid: s m + t n = 1, then z = (-t, s) gives det [w z] = 1.
  std::int64_t r0 = w.m, r1 = w.n, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  std::int64_t z1 = -t0, z2 = s0;
  auto reduce = [&] {
    return std::array<std::uint8_t, 4>{static_cast<std::uint8_t>(mod(w.m, 2)),
                                       static_cast<std::uint8_t>(mod(z1, 2)),
                                       static_cast<std::uint8_t>(mod(w.n, 2)),
                                       static_cast<std::uint8_t>(mod(z2, 2))};
  };
  // [[1,1],[1,0]] mod 2 is outside the listed forms; z + w moves it to [[1,0],[1,1]].
  auto a2 = reduce();
  if (a2 == std::array<std::uint8_t, 4>{1, 1, 1, 0}) {
    z1 += w.m;
    z2 += w.n;
    a2 = reduce();
  }
  require(w.m * z2 - w.n * z1 == 1, ErrorKind::internal, "completion is not in SL(2, Z)");
  Nu0Witness out{{w.m, z1, w.n, z2}, a2, {}};
  // A^{-1} = [[z2, -z1], [-n, m]]
  auto move = [&](Point pt) {
    return Point{mod(z2 * pt.x - z1 * pt.y, 2), mod(-w.n * pt.x + w.m * pt.y, 2)};
  };
  out.moved_points = {move(kP), move(kQ)};
  return out;
}

MiddleBasisNormalization normalize_middle_basis(std::uint8_t u_value, std::uint8_t v_value) {
  require(u_value <= 1 && v_value <= 1, ErrorKind::domain, "form values must be bits");
  require(!(u_value == 1 && v_value == 1), ErrorKind::precondition,
          "pair with values (1, 1) has Arf invariant 1");
  MiddleBasisNormalization out{};
  if (u_value == 0 && v_value == 0) {
    out.case_number = 1;
    out.transform = {1, 1, 0, 1};  // (u, u + v)
  } else if (u_value == 0) {
    out.case_number = 2;
    out.transform = {1, 0, 0, 1};
  } else {
    out.case_number = 3;
    out.transform = {1, 1, 1, 2};  // (u + v, u + 2v)
  }
  const auto& t = out.transform;
  out.values = {torelli::polarized_value(u_value, v_value, t[0], t[2]),
                torelli::polarized_value(u_value, v_value, t[1], t[3])};
  return out;
}

}  // namespace torelli::torus
