// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include "oracles.hpp"

#include "torelli/casson.hpp"
#include "torelli/euclid.hpp"
#include "torelli/json_io.hpp"
#include "torelli/mod2_group.hpp"
#include "torelli/quadratic_form.hpp"
#include "torelli/rng.hpp"
#include "torelli/splitting.hpp"
#include "torelli/torus.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace torelli;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

constexpr std::uint64_t kSeed = 0;

Result fail(std::string why) { return {false, std::move(why)}; }

// -- 1 ---------------------------------------------------------------------

Result form_census() {
  const auto even = enumerate_forms(3, 0);
  const auto odd = enumerate_forms(3, 1);
  if (even.size() != 36 || odd.size() != 28)
    return fail("counts " + std::to_string(even.size()) + "/" + std::to_string(odd.size()));
  // Majority rule: an odd form takes the value 1 on 36 of the 64 vectors.
  for (const auto* set : {&even, &odd})
    for (const auto& form : *set) {
      int ones = 0;
      for (std::uint32_t x = 0; x < 64; ++x) {
        unsigned v = 0;
        for (int i = 0; i < 6; ++i) v += ((x >> i) & 1u) * form.basis_values()[i];
        for (int i = 0; i < 6; i += 2) v += ((x >> i) & 1u) * ((x >> (i + 1)) & 1u);
        ones += v & 1u;
      }
      if ((ones == 36) != (set == &odd)) return fail("oracle disagrees on " + std::to_string(form.bits()));
    }
  return {true, "36 Arf 0, 28 Arf 1"};
}

// -- 2 ---------------------------------------------------------------------

Result orbit_count() {
  if (sp_order_mod2(3) != 1451520) return fail("sp_order_mod2(3) = " + sp_order_mod2(3).str());
  if (hyperelliptic_orbit_count(3).value != 36) return fail("orbit count");
  const auto group = enumerate_sp_mod2(3);
  if (group.size() != 1451520) return fail("enumerated " + std::to_string(group.size()));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < group.size(); i += 97)
    if (!group[i].is_symplectic()) ++bad;
  if (bad != 0) return fail("non-symplectic elements");
  // The 36 even forms make up one orbit of the group, the 28 odd ones another.
  std::vector<std::pair<int, std::size_t>> orbits;
  for (const auto& o : form_orbit_census(group)) orbits.emplace_back(o.arf, o.size);
  std::sort(orbits.begin(), orbits.end());
  if (orbits != std::vector<std::pair<int, std::size_t>>{{0, 36}, {1, 28}})
    return fail("form orbits");
  return {true, "|Sp(6,2)| = 1451520 by enumeration, orbit count 36, form orbits 36 + 28"};
}

// -- 3 ---------------------------------------------------------------------

Result bc_uniqueness() {
  std::vector<SpQuadraticForm> hits;
  for (const auto& form : enumerate_forms(3, 0)) {
    const auto& v = form.basis_values();
    const unsigned single = (v[0] * v[1] * (v[2] + 1) * v[3]) & 1u;
    if (birman_craggs_involution_value(form) != single) return fail("single-term formula");
    if (birman_craggs_pairwise_sum(form) != single) return fail("pairwise sum disagrees");
    if (single) hits.push_back(form);
  }
  if (hits.size() != 1 || hits.front() != reference_form()) return fail("not unique");
  return {true, "unique value-1 form is (1,1,0,1,1,1)"};
}

// -- 4 ---------------------------------------------------------------------

Result morita() {
  const auto base = standard_linking_form();
  const auto l1 = pushforward(base, psi1_matrix());
  const auto l3 = pushforward(base, psi3_matrix());
  const CycleDescriptor cycle(OrthogonalSplitting::standard());
  const auto& g = cycle.gamma_side();
  const auto& d = cycle.delta_side();
  const std::array<Integer, 4> values{
      morita_twist_value(l1, g.u, g.v), morita_twist_value(l1, d.u, d.v),
      morita_twist_value(l3, g.u, g.v), morita_twist_value(l3, d.u, d.v)};
  if (values != std::array<Integer, 4>{1, 0, 0, 1}) return fail("lambda matrix");
  const Integer pairing = cycle_pairing(l1, l3, cycle);
  if (pairing != -1) return fail("pairing " + pairing.str());
  return {true, "lambda = [[1,0],[0,1]], pairing -1"};
}

// -- 5 ---------------------------------------------------------------------

Sl2Matrix random_sl2(SeededRng& rng) {
  Sl2Matrix m;
  const auto n = rng.uniform(1, 10);
  for (std::int64_t i = 0; i < n; ++i) {
    const Integer e = rng.uniform(1, 4) * (rng.coin() ? 1 : -1);
    m = m * (rng.coin() ? Sl2Matrix::r1(e) : Sl2Matrix::r2(e));
  }
  return m;
}

bool replay(const GeneratorWord& w, const Sl2Matrix& x) {
  // Apply letters to the column matrix, last letter first.
  std::array<Integer, 4> c{x(0, 0), x(1, 0), x(0, 1), x(1, 1)};
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const Integer& e = it->exponent;
    if (it->generator == Generator::R1) {
      c[0] += e * c[2];
      c[1] += e * c[3];
    } else {
      c[2] += e * c[0];
      c[3] += e * c[1];
    }
  }
  return c == std::array<Integer, 4>{1, 0, 0, 1};
}

Result euclid() {
  SeededRng rng(derive_seed(kSeed, 5));
  for (int refined = 0; refined < 2; ++refined) {
    for (int done = 0; done < 1000;) {
      const auto x = random_sl2(rng);
      if (refined && (torus_nu(x(0, 0), x(0, 1)) != 0 || torus_nu(x(1, 0), x(1, 1)) != 1)) continue;
      ++done;
      const auto r = refined ? reduce_refined(x) : reduce_full(x);
      if (!replay(r.word, x)) return fail("word does not carry basis to standard");
      if (refined && !r.word.is_refined()) return fail("odd R1 exponent");
      if (Integer(r.iterations) > abs(x(0, 0)) + abs(x(1, 0)) + 8) return fail("descent bound");
    }
  }
  return {true, "1000 full + 1000 refined reductions verified"};
}

// -- 6 ---------------------------------------------------------------------

Result invariants() {
  SeededRng rng(derive_seed(kSeed, 6));
  for (int t = 0; t < 200; ++t) {
    const auto form = SpQuadraticForm::from_bits(3, rng.below(64));
    const auto m = random_sp_element(rng.next(), 8);
    std::vector<HVector> basis;
    for (std::size_t j = 0; j < 6; ++j) basis.emplace_back(m.column(j));
    // Arf on the new basis by the defining sum.
    unsigned total = 0;
    for (std::size_t i = 0; i < 3; ++i)
      total += evaluate(form, basis[2 * i]) * evaluate(form, basis[2 * i + 1]);
    if ((total & 1u) != arf(form)) return fail("Arf changed under a basis change");
  }
  const IntMatrix j = intersection_matrix(3);
  for (int t = 0; t < 100; ++t) {
    const auto l = pushforward(standard_linking_form(), random_sp_element(rng.next(), 8)).matrix();
    if (l.transpose() - l != j) return fail("Seifert relation broken");
  }
  for (int t = 0; t < 100; ++t) {
    const auto l = pushforward(standard_linking_form(), random_sp_element(rng.next(), 8));
    const auto m = random_sp_element(rng.next(), 6);
    const HVector a(m.column(0)), b(m.column(1));
    const auto c = random_sl2(rng);
    const HVector a2 = c(0, 0) * a + c(1, 0) * b;
    const HVector b2 = c(0, 1) * a + c(1, 1) * b;
    if (morita_twist_value(l, a, b) != morita_twist_value(l, a2, b2))
      return fail("Morita value depends on side basis");
  }
  return {true, "200 Arf, 100 Seifert, 100 side-basis checks"};
}

// -- 7 ---------------------------------------------------------------------

Result splitting_criterion() {
  const auto s = OrthogonalSplitting::standard();
  std::array<std::size_t, 3> order{0, 1, 2};
  int symmetric = 0;
  do {
    const OrthogonalSplitting p(s[order[0]], s[order[1]], s[order[2]]);
    if (is_symmetric_splitting(p)) {
      ++symmetric;
      if (order[1] != 1) return fail("symmetric ordering without the Arf 0 summand in the middle");
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (symmetric != 2) return fail(std::to_string(symmetric) + " symmetric orderings");
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto t = random_symmetric_splitting(derive_seed(kSeed, 700 + i));
    const auto [canon, sign] = canonical_form(t);
    const auto again = canonical_form(canon);
    const auto flipped = canonical_form(t.reversed());
    if (again.first != canon || again.second != 1) return fail("not idempotent");
    if (flipped.first != canon || flipped.second * sign != -1) return fail("sign not multiplicative");
  }
  return {true, "2 of 6 orderings symmetric; canonical form on 100 splittings"};
}

// -- 8, 9 ------------------------------------------------------------------

std::vector<OrthogonalSplitting> family() { return seeded_symmetric_family(3, derive_seed(kSeed, 8)); }

Integer morita_direct(const IntMatrix& l, const HVector& a, const HVector& b) {
  auto form = [&](const HVector& x, const HVector& y) {
    Integer t = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t k = 0; k < 6; ++k) t += x[i] * l(i, k) * y[k];
    return t;
  };
  return form(a, a) * form(b, b) - form(a, b) * form(b, a);
}

Result certificates() {
  std::vector<CycleDescriptor> cycles;
  for (const auto& s : family()) cycles.emplace_back(s);
  const auto cert = find_independence_certificate(cycles, kSeed, 100000);
  if (cert.rank != 3) return fail("rank " + std::to_string(cert.rank));
  // Replay from serialized data with direct formulas and a rational rank.
  const auto stored = json::decode_certificate(json::Json::parse(json::encode(cert).dump()));
  if (!verify_certificate(stored).valid) return fail("verify_certificate rejected it");
  const std::size_t pairs = stored.functionals.size() / 2;
  IntMatrix values(pairs, stored.cycles.size());
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto& m1 = stored.functionals[2 * k];
    const auto& m2 = stored.functionals[2 * k + 1];
    if (!is_symplectic(m1) || !is_symplectic(m2)) return fail("functional not symplectic");
    const auto l1 = m1.transpose() * standard_linking_form().matrix() * m1;
    const auto l2 = m2.transpose() * standard_linking_form().matrix() * m2;
    for (std::size_t i = 0; i < stored.cycles.size(); ++i) {
      const auto& g = stored.cycles[i].gamma_side();
      const auto& d = stored.cycles[i].delta_side();
      values(k, i) = -(morita_direct(l1, g.u, g.v) * morita_direct(l2, d.u, d.v) -
                       morita_direct(l1, d.u, d.v) * morita_direct(l2, g.u, g.v));
    }
  }
  if (values != stored.value_matrix) return fail("value matrix does not replay");
  if (oracle::rank(values) != 3) return fail("replayed rank below 3");
  return {true, "rank 3 with " + std::to_string(pairs) + " functional pairs, replayed"};
}

Result generic_class() {
  const auto fam = family();
  const auto found = choose_generic_class(fam, kSeed, 5);
  if (!is_primitive(found.x)) return fail("x not primitive");
  for (const auto& c : found.x.coords())
    if (abs(c) > 5) return fail("coordinate beyond 5");
  std::vector<std::vector<HVector>> comps, prims;
  for (const auto& s : fam) {
    IntMatrix basis(6, 6);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 6; ++i) {
        basis(i, 2 * j) = s[j].u[i];
        basis(i, 2 * j + 1) = s[j].v[i];
      }
    const auto y = oracle::solve(basis, found.x.coords());
    if (!y) return fail("singular splitting basis");
    std::vector<HVector> c, p;
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& al = (*y)[2 * j];
      const auto& be = (*y)[2 * j + 1];
      if (denominator(al) != 1 || denominator(be) != 1) return fail("non-integral projection");
      const HVector part = numerator(al) * s[j].u + numerator(be) * s[j].v;
      if (part.is_zero()) return fail("zero component");
      const Integer k = content(part);
      std::vector<Integer> q;
      for (const auto& e : part.coords()) q.push_back(e / k);
      c.push_back(part);
      p.emplace_back(q);
    }
    std::sort(c.begin(), c.end());
    std::sort(p.begin(), p.end());
    comps.push_back(c);
    prims.push_back(p);
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t k = i + 1; k < fam.size(); ++k)
      if (comps[i] == comps[k] || prims[i] == prims[k]) return fail("decompositions not distinct");
  std::string xs;
  for (const auto& c : found.x.coords()) xs += (xs.empty() ? "" : ",") + c.str();
  return {true, "x = (" + xs + ")"};
}

// -- 10 --------------------------------------------------------------------

Result torus_lines() {
  using namespace torus;
  const std::array<Point, 2> marked{kP, kQ};
  auto mod = [](std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; };
  // Value of a x + b y + c at a marked point, in half units mod 4.
  auto value = [&](const LatticeLine& l, Point p) {
    return mod(2 * (l.a() * p.x + l.b() * p.y) + l.twice_c(), 4);
  };
  std::size_t classes = 0;
  for (std::int64_t m = -20; m <= 20; ++m)
    for (std::int64_t n = -20; n <= 20; ++n) {
      const HomologyClass w{m, n};
      if (!is_primitive(w)) continue;
      ++classes;
      const auto t1 = realize_symmetric(w);
      // The involution sends c to -c, so invariance means 2c = 0 mod 2.
      if (t1.realized_class() != w || mod(2 * t1.twice_c(), 4) != 0 || value(t1, kP) == 0)
        return fail("t1 at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      if (mod(n * (1 + m), 2) == 1) {
        const auto t = realize_nu1(w);
        if (t.realized_class() != w || mod(2 * t.twice_c(), 4) != 0 || value(t, kP) == 0 ||
            value(t, kQ) == 0)
          return fail("t21 at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      } else {
        const auto [l1, l2] = realize_nu0_pair(w);
        bool ok = l1.realized_class() == w && l2.realized_class() == w &&
                  l1.twice_c() != l2.twice_c() && mod(l1.twice_c() + l2.twice_c(), 4) == 0;
        for (const auto& p : marked) ok = ok && value(l1, p) != 0 && value(l2, p) != 0;
        // p and q on opposite sides: values relative to line 1 straddle line 2.
        const auto pos = [&](Point p) { return mod(2 * (m * p.y - n * p.x) + l1.twice_c(), 4); };
        const std::int64_t cut = mod(l1.twice_c() - l2.twice_c(), 4);
        ok = ok && ((pos(kP) < cut) != (pos(kQ) < cut));
        ok = ok && annulus_occupancy(l1, l2, marked) == std::array<int, 2>{1, 1};
        if (!ok) return fail("t22 at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
    }
  return {true, std::to_string(classes) + " primitive classes"};
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "form census", 1, form_census},
      {2, "orbit count and Sp(6,2) enumeration", 60, orbit_count},
      {3, "involution value uniqueness", 1, bc_uniqueness},
      {4, "Morita values and cycle pairing", 1, morita},
      {5, "Euclid reduction suites", 10, euclid},
      {6, "algebraic invariants", 30, invariants},
      {7, "splitting criterion and canonical form", 30, splitting_criterion},
      {8, "independence certificate", 120, certificates},
      {9, "generic class", 10, generic_class},
      {10, "torus realizations", 10, torus_lines},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r{false, ""};
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && seconds > c.limit_seconds) {
      r = fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds));
    }
    if (!r.pass) ++failures;
    std::printf("%s criterion %d: %s [%.3f s / %.0f s] %s\n", r.pass ? "PASS" : "FAIL", c.number,
                c.title, seconds, c.limit_seconds, r.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
