#include "torelli/error.hpp"
#include "torelli/rng.hpp"
#include "torelli/symplectic.hpp"

#include <doctest.h>

using namespace torelli;

namespace {

// sum over handles of x_a y_b - x_b y_a
Integer pairing_oracle(const HVector& x, const HVector& y) {
  Integer total = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) total += x[i] * y[i + 1] - x[i + 1] * y[i];
  return total;
}

HVector random_vector(SeededRng& rng, std::int64_t bound, std::size_t genus = 3) {
  std::vector<Integer> c;
  for (std::size_t i = 0; i < 2 * genus; ++i) c.emplace_back(rng.uniform(-bound, bound));
  return HVector(c);
}

// Saturation check: some (p u + q v) / d integral with (p, q) != 0 mod d.
bool saturated_oracle(const HVector& u, const HVector& v) {
  for (std::int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    for (std::int64_t p = 0; p < d; ++p)
      for (std::int64_t q = 0; q < d; ++q) {
        if (p == 0 && q == 0) continue;
        bool divisible = true;
        for (std::size_t i = 0; i < u.size() && divisible; ++i)
          divisible = (p * u[i] + q * v[i]) % d == 0;
        if (divisible) return false;
      }
  }
  return true;
}

}  // namespace

TEST_CASE("intersection form on the standard basis") {
  CHECK(intersection(HVector::a(1), HVector::b(1)) == 1);
  CHECK(intersection(HVector::b(1), HVector::a(1)) == -1);
  CHECK(intersection(HVector::a(1), HVector::b(2)) == 0);
  CHECK(intersection(HVector::a(3), HVector::b(3)) == 1);
  const auto j = intersection_matrix(2);
  CHECK(j == IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  CHECK_THROWS_AS(intersection(HVector{1, 0}, HVector::a(1)), Error);
}

TEST_CASE("intersection matches the coordinate formula and is alternating") {
  SeededRng rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto x = random_vector(rng, 9);
    const auto y = random_vector(rng, 9);
    CHECK(intersection(x, y) == pairing_oracle(x, y));
    CHECK(intersection(x, y) == -intersection(y, x));
    CHECK(intersection(x, x) == 0);
  }
}

TEST_CASE("transvections follow their defining formula") {
  SeededRng rng(22);
  for (int t = 0; t < 100; ++t) {
    auto v = random_vector(rng, 3);
    if (v.is_zero()) continue;
    const Integer k = rng.uniform(-3, 3);
    const auto m = transvection(v, k);
    const auto x = random_vector(rng, 5);
    CHECK(apply(m, x) == x + (k * pairing_oracle(x, v)) * v);
    CHECK(is_symplectic(m));
    CHECK(m * transvection(v, -k) == IntMatrix::identity(6));
  }
  CHECK_THROWS_AS(transvection(HVector::zero(3)), Error);
}

TEST_CASE("random symplectic elements are seeded and symplectic") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto m = random_sp_element(seed, 12);
    CHECK(is_symplectic(m));
    CHECK(m == random_sp_element(seed, 12));
    CHECK(m * symplectic_inverse(m) == IntMatrix::identity(6));
    const auto x = HVector(m.column(0));
    const auto y = HVector(m.column(1));
    CHECK(pairing_oracle(x, y) == 1);
  }
  CHECK(random_sp_element(1, 12) != random_sp_element(2, 12));
  CHECK(is_symplectic(random_sp_element(5, 6, 2)));
}

TEST_CASE("is_symplectic rejects non-symplectic matrices") {
  IntMatrix m = IntMatrix::identity(6);
  m(0, 0) = 2;
  CHECK_FALSE(is_symplectic(m));
  m = IntMatrix::identity(6);
  m(0, 2) = 1;  // a2 -> a2 + a1 now meets b1
  CHECK_FALSE(is_symplectic(m));
}

TEST_CASE("primitivity and content") {
  CHECK(is_primitive(HVector{2, 3, 0, 0, 0, 0}));
  CHECK_FALSE(is_primitive(HVector{2, 4, 0, 6, 0, 0}));
  CHECK_FALSE(is_primitive(HVector::zero(3)));
  CHECK(content(HVector{-6, 9, 0, 0, 3, 0}) == 3);
  CHECK(content(HVector::zero(3)) == 0);
}

TEST_CASE("direct summands agree with a saturation oracle") {
  SeededRng rng(23);
  int summands = 0, non_summands = 0;
  for (int t = 0; t < 400; ++t) {
    const auto u = random_vector(rng, 2);
    const auto v = random_vector(rng, 2);
    try {
      const Sublattice s({u, v});
      const bool expected = saturated_oracle(u, v);
      CHECK(s.is_direct_summand() == expected);
      (expected ? summands : non_summands)++;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::precondition);  // dependent pair
    }
  }
  CHECK(summands > 0);
  CHECK(non_summands > 0);
}

TEST_CASE("sublattice membership and canonical form") {
  const Sublattice s({HVector{1, 1, 0, 0, 0, 0}, HVector{0, 2, 0, 0, 0, 0}});
  CHECK(s.contains(HVector{1, 3, 0, 0, 0, 0}));
  CHECK_FALSE(s.contains(HVector{0, 1, 0, 0, 0, 0}));
  CHECK_FALSE(s.is_direct_summand());
  const Sublattice t({HVector{1, 3, 0, 0, 0, 0}, HVector{0, -2, 0, 0, 0, 0}});
  CHECK(s.hermite_form() == t.hermite_form());
  CHECK_THROWS_AS(Sublattice({HVector{1, 2, 0, 0, 0, 0}, HVector{2, 4, 0, 0, 0, 0}}), Error);
}
