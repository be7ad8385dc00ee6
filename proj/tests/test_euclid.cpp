#include "torelli/error.hpp"
#include "torelli/euclid.hpp"
#include "torelli/rng.hpp"

#include <doctest.h>

#include <array>

using namespace torelli;

namespace {

using M2 = std::array<Integer, 4>;

M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

M2 letter_matrix(const Letter& l) {
  if (l.generator == Generator::R1) return {1, l.exponent, 0, 1};
  return {1, 0, l.exponent, 1};
}

// Independent replay: L0 * L1 * ... * X^T must be the identity.
bool replay(const GeneratorWord& w, const Sl2Matrix& x) {
  M2 acc{1, 0, 0, 1};
  for (const auto& l : w.letters()) acc = mul(acc, letter_matrix(l));
  const M2 columns{x(0, 0), x(1, 0), x(0, 1), x(1, 1)};
  return mul(acc, columns) == M2{1, 0, 0, 1};
}

Sl2Matrix random_sl2(SeededRng& rng, int max_letters) {
  Sl2Matrix m;
  const auto n = rng.uniform(0, max_letters);
  for (std::int64_t i = 0; i < n; ++i) {
    const Integer e = rng.uniform(1, 4) * (rng.coin() ? 1 : -1);
    m = m * (rng.coin() ? Sl2Matrix::r1(e) : Sl2Matrix::r2(e));
  }
  return m;
}

bool within_bound(const Reduction& r, const Sl2Matrix& x) {
  return Integer(r.iterations) <= abs(x(0, 0)) + abs(x(1, 0)) + 8;
}

}  // namespace

TEST_CASE("sl2 construction") {
  CHECK_THROWS_AS(Sl2Matrix(2, 0, 0, 1), Error);
  CHECK(Sl2Matrix::r1(3) == Sl2Matrix(1, 3, 0, 1));
  CHECK(Sl2Matrix::r2(-2) == Sl2Matrix(1, 0, -2, 1));
  CHECK(Sl2Matrix::r1(2) * Sl2Matrix::r1(-2) == Sl2Matrix());
}

TEST_CASE("torus nu values") {
  CHECK(torus_nu(1, 0) == 0);
  CHECK(torus_nu(0, 1) == 1);
  CHECK(torus_nu(1, 1) == 0);
  CHECK(torus_nu(2, 1) == 1);
  CHECK(torus_nu(-1, 3) == 0);
  CHECK(torus_nu(4, -3) == 1);
}

TEST_CASE("standard basis needs no letters") {
  const auto full = reduce_full(Sl2Matrix());
  CHECK(full.word.empty());
  CHECK(full.iterations == 0);
  CHECK(reduce_refined(Sl2Matrix()).word.empty());
}

TEST_CASE("minus identity") {
  const Sl2Matrix minus(-1, 0, 0, -1);
  const auto r = reduce_refined(minus);
  const GeneratorWord expected({{Generator::R1, -2}, {Generator::R2, 1},
                                {Generator::R1, -2}, {Generator::R2, 1}});
  CHECK(r.word == expected);
  CHECK(replay(r.word, minus));
  CHECK(r.word.evaluate() == minus);
  CHECK(r.iterations == 4);
  // The rotation R2 R1^-2 R2 R1^-2 works as well.
  const GeneratorWord rotated({{Generator::R2, 1}, {Generator::R1, -2},
                               {Generator::R2, 1}, {Generator::R1, -2}});
  CHECK(carries_to_standard(rotated, minus));
}

TEST_CASE("small examples reduce") {
  for (const Sl2Matrix x : {Sl2Matrix(3, 1, 2, 1), Sl2Matrix(0, 1, -1, 0), Sl2Matrix(0, -1, 1, 0),
                            Sl2Matrix(1, 5, 0, 1), Sl2Matrix(1, 0, 7, 1), Sl2Matrix(-1, 2, 0, -1)}) {
    const auto r = reduce_full(x);
    CHECK(replay(r.word, x));
    CHECK(carries_to_standard(r.word, x));
    CHECK(within_bound(r, x));
  }
}

TEST_CASE("full reductions verify on seeded random bases") {
  SeededRng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const auto x = random_sl2(rng, 9);
    const auto r = reduce_full(x);
    CHECK(replay(r.word, x));
    CHECK(r.iterations == r.word.size());
    CHECK(r.trace.size() == r.word.size() + 1);
    CHECK(within_bound(r, x));
  }
}

TEST_CASE("refined reductions use only even R1 exponents") {
  SeededRng rng(42);
  int done = 0;
  while (done < 1000) {
    const auto x = random_sl2(rng, 9);
    if (torus_nu(x(0, 0), x(0, 1)) != 0 || torus_nu(x(1, 0), x(1, 1)) != 1) continue;
    ++done;
    const auto r = reduce_refined(x);
    CHECK(replay(r.word, x));
    for (const auto& l : r.word.letters())
      if (l.generator == Generator::R1) CHECK(parity(l.exponent) == 0);
    CHECK(r.word.is_refined());
    CHECK(within_bound(r, x));
  }
}

TEST_CASE("large entries stay exact") {
  Sl2Matrix x;
  for (int i = 0; i < 40; ++i) x = x * Sl2Matrix::r1(7) * Sl2Matrix::r2(-5);
  CHECK(abs(x(0, 0)) > Integer(1) << 64);
  const auto r = reduce_full(x);
  CHECK(replay(r.word, x));
}

TEST_CASE("refined preconditions") {
  CHECK_THROWS_AS(reduce_refined(Sl2Matrix(0, 1, -1, 0)), Error);  // nu(a') = 1
  CHECK_THROWS_AS(reduce_refined(Sl2Matrix(2, 1, 1, 1)), Error);   // nu(a') = 1
  try {
    reduce_refined(Sl2Matrix(1, 0, 1, 1));  // nu(b') = 0
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("words evaluate in stored order") {
  const GeneratorWord w({{Generator::R1, 1}, {Generator::R2, 1}});
  CHECK(w.evaluate() == Sl2Matrix::r1(1) * Sl2Matrix::r2(1));
  CHECK_FALSE(w.is_refined());
  CHECK(GeneratorWord({{Generator::R1, 4}, {Generator::R2, 3}}).is_refined());
}
