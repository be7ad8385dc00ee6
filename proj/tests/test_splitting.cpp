#include "oracles.hpp"

#include "torelli/error.hpp"
#include "torelli/euclid.hpp"
#include "torelli/rng.hpp"
#include "torelli/splitting.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

using namespace torelli;

namespace {

std::array<HVector, 3> project_oracle(const HVector& x, const OrthogonalSplitting& s) {
  IntMatrix basis(6, 6);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 6; ++i) {
      basis(i, 2 * j) = s[j].u[i];
      basis(i, 2 * j + 1) = s[j].v[i];
    }
  const auto coeffs = oracle::solve(basis, x.coords());
  REQUIRE(coeffs.has_value());
  std::array<HVector, 3> out;
  for (std::size_t j = 0; j < 3; ++j) {
    const auto& alpha = (*coeffs)[2 * j];
    const auto& beta = (*coeffs)[2 * j + 1];
    REQUIRE(denominator(alpha) == 1);
    REQUIRE(denominator(beta) == 1);
    out[j] = numerator(alpha) * s[j].u + numerator(beta) * s[j].v;
  }
  return out;
}

HVector primitive_part(const HVector& x) {
  Integer g = 0;
  for (const auto& c : x.coords()) g = gcd(g, abs(c));
  std::vector<Integer> c;
  for (const auto& xi : x.coords()) c.push_back(xi / g);
  return HVector(c);
}

// Conditions on x for a family, re-derived from the oracle projection.
bool generic_oracle(const std::vector<OrthogonalSplitting>& family, const HVector& x) {
  std::vector<std::vector<HVector>> components, primitives;
  for (const auto& s : family) {
    auto parts = project_oracle(x, s);
    std::vector<HVector> comp(parts.begin(), parts.end()), prim;
    for (const auto& p : comp) {
      if (p.is_zero()) return false;
      prim.push_back(primitive_part(p));
    }
    std::sort(comp.begin(), comp.end());
    std::sort(prim.begin(), prim.end());
    components.push_back(comp);
    primitives.push_back(prim);
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t k = i + 1; k < family.size(); ++k)
      if (components[i] == components[k] || primitives[i] == primitives[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("standard splitting") {
  const auto s = OrthogonalSplitting::standard();
  CHECK(s[0] == SummandBasis{HVector::a(1), HVector::b(1)});
  CHECK(s[2] == SummandBasis{HVector::a(3), HVector::b(3)});
  CHECK(arf_pattern(s) == std::array<std::uint8_t, 3>{1, 0, 1});
  CHECK(is_symmetric_splitting(s));
  CHECK(is_symmetric_splitting(s.reversed()));
}

TEST_CASE("invalid splittings are rejected") {
  const SummandBasis v1{HVector::a(1), HVector::b(1)};
  const SummandBasis v2{HVector::a(2), HVector::b(2)};
  const SummandBasis v3{HVector::a(3), HVector::b(3)};
  const SummandBasis doubled{2 * HVector::a(1), HVector::b(1)};
  const SummandBasis leaky{HVector::a(2) + HVector::a(1), HVector::b(2)};
  const SummandBasis dependent{HVector::a(1), 3 * HVector::a(1)};
  for (const auto& bad : {doubled, dependent}) {
    CHECK_THROWS_AS(OrthogonalSplitting(bad, v2, v3), Error);
  }
  CHECK_THROWS_AS(OrthogonalSplitting(v1, leaky, v3), Error);
  CHECK_THROWS_AS(OrthogonalSplitting(v1, v1, v3), Error);
  CHECK(is_orthogonal_splitting(v1.lattice(), v2.lattice(), v3.lattice()));
  CHECK_FALSE(is_orthogonal_splitting(v1.lattice(), leaky.lattice(), v3.lattice()));
}

TEST_CASE("exactly two orderings of the standard splitting are symmetric") {
  const auto s = OrthogonalSplitting::standard();
  std::array<std::size_t, 3> order{0, 1, 2};
  std::set<std::array<std::size_t, 3>> symmetric;
  do {
    if (is_symmetric_splitting(OrthogonalSplitting(s[order[0]], s[order[1]], s[order[2]])))
      symmetric.insert(order);
  } while (std::next_permutation(order.begin(), order.end()));
  const std::set<std::array<std::size_t, 3>> expected{{0, 1, 2}, {2, 1, 0}};
  CHECK(symmetric == expected);
}

TEST_CASE("symplectic images of splittings are splittings") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = random_sp_element(seed, 8);
    const auto image = apply(m, OrthogonalSplitting::standard());
    CHECK(is_orthogonal_splitting(image[0].lattice(), image[1].lattice(), image[2].lattice()));
  }
}

TEST_CASE("canonical form is idempotent and the sign is multiplicative") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = random_symmetric_splitting(seed);
    CHECK(is_symmetric_splitting(s));
    const auto [canon, sign] = canonical_form(s);
    CHECK((sign == 1 || sign == -1));
    const auto again = canonical_form(canon);
    CHECK(again.first == canon);
    CHECK(again.second == 1);
    const auto flipped = canonical_form(s.reversed());
    CHECK(flipped.first == canon);
    CHECK(flipped.second == -sign);
    CHECK(unordered_key(s) == unordered_key(s.reversed()));
    // A basis change inside each summand does not move the canonical form.
    const auto& t = s.summands();
    const OrthogonalSplitting rebased({t[0].u + t[0].v, t[0].v}, {t[1].u, t[1].v - 2 * t[1].u},
                                      {-t[2].v, t[2].u});
    CHECK(canonical_form(rebased) == canonical_form(s));
  }
}

TEST_CASE("projection agrees with a rational linear solve") {
  SeededRng rng(51);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = apply(random_sp_element(seed, 6), OrthogonalSplitting::standard());
    std::vector<Integer> c;
    for (int i = 0; i < 6; ++i) c.emplace_back(rng.uniform(-9, 9));
    const HVector x(c);
    const auto parts = project(x, s);
    CHECK(parts == project_oracle(x, s));
    for (std::size_t j = 0; j < 3; ++j) CHECK(s[j].lattice().contains(parts[j]));
  }
}

TEST_CASE("seeded symmetric families are distinct and reproducible") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto family = seeded_symmetric_family(4, seed);
    REQUIRE(family.size() == 4);
    CHECK(family == seeded_symmetric_family(4, seed));
    std::set<std::array<IntMatrix, 3>, decltype([](const auto& x, const auto& y) {
               for (std::size_t j = 0; j < 3; ++j) {
                 const int c = compare(x[j], y[j]);
                 if (c != 0) return c < 0;
               }
               return false;
             })>
        keys;
    for (const auto& s : family) {
      CHECK(is_symmetric_splitting(s));
      keys.insert(unordered_key(s));
    }
    CHECK(keys.size() == 4);
  }
}

TEST_CASE("generic classes satisfy the conditions by an independent check") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto family = seeded_symmetric_family(3, seed);
    const auto found = choose_generic_class(family, seed);
    CHECK(is_primitive(found.x));
    for (const auto& c : found.x.coords()) CHECK(abs(c) <= kDefaultCoordinateBound);
    CHECK(generic_oracle(family, found.x));
    REQUIRE(found.decompositions.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& d = found.decompositions[i];
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(d.multiplicities[j] > 0);
        CHECK(d.multiplicities[j] * d.primitive_parts[j] == d.components[j]);
        CHECK(is_primitive(d.primitive_parts[j]));
      }
    }
    CHECK(choose_generic_class(family, seed).x == found.x);
  }
}

TEST_CASE("generic class search failures") {
  const auto s = OrthogonalSplitting::standard();
  try {
    choose_generic_class({s, s.reversed()}, 0, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);  // not pairwise distinct
  }
  try {
    choose_generic_class({s}, 0, 0);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
  }
  CHECK_FALSE(check_generic_class({s}, HVector{1, 0, 1, 0, 0, 0}).has_value());  // V3 part is 0
  CHECK(check_generic_class({s}, HVector{1, 0, 1, 0, 1, 0}).has_value());
}

TEST_CASE("middle basis normalization") {
  const auto w = reference_form();
  SeededRng rng(52);
  for (int t = 0; t < 100; ++t) {
    // Random basis of the middle summand of the standard splitting.
    Sl2Matrix c;
    for (int k = 0; k < 4; ++k) {
      const Integer e = rng.uniform(-3, 3);
      c = c * (rng.coin() ? Sl2Matrix::r1(e) : Sl2Matrix::r2(e));
    }
    const SummandBasis pair{c(0, 0) * HVector::a(2) + c(1, 0) * HVector::b(2),
                            c(0, 1) * HVector::a(2) + c(1, 1) * HVector::b(2)};
    REQUIRE_FALSE((evaluate(w, pair.u) == 1 && evaluate(w, pair.v) == 1));  // Arf 0 summand
    const auto n = normalize_middle(w, pair);
    CHECK(evaluate(w, n.u) == 0);
    CHECK(evaluate(w, n.v) == 1);
    CHECK(intersection(n.u, n.v) == 1);
    CHECK(n.lattice().hermite_form() == pair.lattice().hermite_form());
  }
  CHECK_THROWS_AS(normalize_middle(w, {HVector::a(1), HVector::b(1)}), Error);
}
