#include "torelli/splitting.hpp"

#include "torelli/error.hpp"
#include "torelli/rng.hpp"
#include "torelli/torus.hpp"

#include <algorithm>
#include <numeric>

namespace torelli {

namespace {

bool unit(const Integer& x) { return x == 1 || x == -1; }

std::array<HVector, 3> sorted(std::array<HVector, 3> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool is_orthogonal_splitting(const Sublattice& v1, const Sublattice& v2, const Sublattice& v3) {
  const std::array<const Sublattice*, 3> parts{&v1, &v2, &v3};
  for (const auto* p : parts) {
    require(p->rank() == 2, ErrorKind::precondition, "splitting summands must have rank 2");
    require(p->ambient_size() == 2 * kDefaultGenus, ErrorKind::precondition,
            "splittings live in the genus-3 lattice");
  }
  for (const auto* p : parts)
    if (!unit(intersection((*p)[0], (*p)[1]))) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (const auto& x : parts[i]->basis())
        for (const auto& y : parts[j]->basis())
          if (intersection(x, y) != 0) return false;
  IntMatrix all(6, 6);
  std::size_t r = 0;
  for (const auto* p : parts)
    for (const auto& x : p->basis()) {
      for (std::size_t c = 0; c < 6; ++c) all(r, c) = x[c];
      ++r;
    }
  return unit(determinant(all));
}

OrthogonalSplitting::OrthogonalSplitting(SummandBasis v1, SummandBasis v2, SummandBasis v3)
    : summands_{std::move(v1), std::move(v2), std::move(v3)} {
  require(is_orthogonal_splitting(summands_[0].lattice(), summands_[1].lattice(),
                                  summands_[2].lattice()),
          ErrorKind::precondition, "not an orthogonal splitting of H");
}

OrthogonalSplitting OrthogonalSplitting::standard() {
  return {{HVector::a(1), HVector::b(1)},
          {HVector::a(2), HVector::b(2)},
          {HVector::a(3), HVector::b(3)}};
}

OrthogonalSplitting OrthogonalSplitting::reversed() const {
  return {summands_[2], summands_[1], summands_[0]};
}

std::array<std::uint8_t, 3> arf_pattern(const OrthogonalSplitting& s,
                                        const SpQuadraticForm& form) {
  std::array<std::uint8_t, 3> out{};
  for (std::size_t j = 0; j < 3; ++j) out[j] = arf(restrict(form, s[j].lattice()));
  return out;
}

bool is_symmetric_splitting(const OrthogonalSplitting& s, const SpQuadraticForm& form) {
  return arf_pattern(s, form) == std::array<std::uint8_t, 3>{1, 0, 1};
}

namespace {

SummandBasis hermite_basis(const SummandBasis& part) {
  const IntMatrix h = part.lattice().hermite_form();
  return {HVector(h.row(0)), HVector(h.row(1))};
}

}  // namespace

std::pair<OrthogonalSplitting, int> canonical_form(const OrthogonalSplitting& s) {
  require(is_symmetric_splitting(s), ErrorKind::precondition,
          "canonical_form needs a symmetric splitting");
  const SummandBasis h1 = hermite_basis(s[0]);
  const SummandBasis h2 = hermite_basis(s[1]);
  const SummandBasis h3 = hermite_basis(s[2]);
  if (compare(h3.lattice().basis_matrix(), h1.lattice().basis_matrix()) < 0)
    return {OrthogonalSplitting(h3, h2, h1), -1};
  return {OrthogonalSplitting(h1, h2, h3), 1};
}

std::array<IntMatrix, 3> unordered_key(const OrthogonalSplitting& s) {
  std::array<IntMatrix, 3> key{s[0].lattice().hermite_form(), s[1].lattice().hermite_form(),
                               s[2].lattice().hermite_form()};
  if (compare(key[2], key[0]) < 0) std::swap(key[0], key[2]);
  return key;
}

std::array<HVector, 3> project(const HVector& x, const OrthogonalSplitting& s) {
  require(x.size() == 2 * kDefaultGenus, ErrorKind::dimension, "project: vector length");
  std::array<HVector, 3> out;
  for (std::size_t j = 0; j < 3; ++j) {
    // x_j = alpha u + beta v with x . v = alpha (u . v) and x . u = -beta (u . v);
    // the other summands pair trivially with u and v.
    const auto& [u, v] = s[j];
    const Integer eps = intersection(u, v);
    const Integer alpha = intersection(x, v) * eps;
    const Integer beta = -intersection(x, u) * eps;
    out[j] = alpha * u + beta * v;
  }
  require(out[0] + out[1] + out[2] == x, ErrorKind::internal, "projection does not reassemble");
  return out;
}

std::optional<GenericClass> check_generic_class(const std::vector<OrthogonalSplitting>& family,
                                                const HVector& x) {
  GenericClass out{x, {}};
  std::vector<std::array<HVector, 3>> component_sets;
  std::vector<std::array<HVector, 3>> primitive_sets;
  for (const auto& s : family) {
    GenericDecomposition d;
    d.components = project(x, s);
    for (std::size_t j = 0; j < 3; ++j) {
      if (d.components[j].is_zero()) return std::nullopt;
      d.multiplicities[j] = content(d.components[j]);
      std::vector<Integer> coords = d.components[j].coords();
      for (auto& c : coords) c /= d.multiplicities[j];
      d.primitive_parts[j] = HVector(std::move(coords));
    }
    const auto comps = sorted(d.components);
    const auto prims = sorted(d.primitive_parts);
    if (std::find(component_sets.begin(), component_sets.end(), comps) != component_sets.end())
      return std::nullopt;
    if (std::find(primitive_sets.begin(), primitive_sets.end(), prims) != primitive_sets.end())
      return std::nullopt;
    component_sets.push_back(comps);
    primitive_sets.push_back(prims);
    out.decompositions.push_back(std::move(d));
  }
  return out;
}

GenericClass choose_generic_class(const std::vector<OrthogonalSplitting>& family,
                                  std::uint64_t seed, std::int64_t coordinate_bound) {
  require(!family.empty(), ErrorKind::precondition, "generic class needs a nonempty family");
  require(coordinate_bound >= 1 && coordinate_bound <= 1000, ErrorKind::domain,
          "coordinate bound must be in [1, 1000]");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      require(unordered_key(family[i]) != unordered_key(family[j]), ErrorKind::precondition,
              "family splittings must be pairwise distinct");

  const std::uint64_t side = 2 * static_cast<std::uint64_t>(coordinate_bound) + 1;
  std::uint64_t total = 1;
  for (int k = 0; k < 6; ++k) total *= side;
  // Seeded scan order: i -> (mult * i + offset) mod total with mult a unit.
  SeededRng rng(seed);
  std::uint64_t mult = 1 + rng.below(total - 1);
  while (std::gcd(mult, total) != 1) mult = 1 + rng.below(total - 1);
  const std::uint64_t offset = rng.below(total);

  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t index = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(mult) * i + offset) % total);
    std::vector<Integer> coords(6);
    for (auto& c : coords) {
      c = static_cast<std::int64_t>(index % side) - coordinate_bound;
      index /= side;
    }
    HVector x(std::move(coords));
    if (!is_primitive(x)) continue;
    if (auto found = check_generic_class(family, x)) return *std::move(found);
  }
  fail(ErrorKind::not_found, "no generic class with coordinates in [-" +
                                 std::to_string(coordinate_bound) + ", " +
                                 std::to_string(coordinate_bound) + "]");
}

OrthogonalSplitting apply(const IntMatrix& m, const OrthogonalSplitting& s) {
  auto move = [&](const SummandBasis& p) { return SummandBasis{apply(m, p.u), apply(m, p.v)}; };
  return {move(s[0]), move(s[1]), move(s[2])};
}

OrthogonalSplitting random_symmetric_splitting(std::uint64_t seed, std::size_t word_length) {
  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    const IntMatrix m = random_sp_element(derive_seed(seed, attempt), word_length);
    OrthogonalSplitting s = apply(m, OrthogonalSplitting::standard());
    if (is_symmetric_splitting(s)) return s;
  }
  fail(ErrorKind::not_found, "no symmetric splitting among sampled images");
}

std::vector<OrthogonalSplitting> seeded_symmetric_family(std::size_t count, std::uint64_t seed,
                                                         std::size_t word_length) {
  std::vector<OrthogonalSplitting> family;
  std::vector<std::array<IntMatrix, 3>> keys;
  for (std::uint64_t stream = 0; family.size() < count; ++stream) {
    require(stream < 100000, ErrorKind::not_found, "could not build a distinct family");
    OrthogonalSplitting s = random_symmetric_splitting(derive_seed(seed, stream), word_length);
    auto key = unordered_key(s);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(std::move(key));
    family.push_back(std::move(s));
  }
  return family;
}

SummandBasis normalize_middle(const SpQuadraticForm& form, const SummandBasis& pair) {
  require(intersection(pair.u, pair.v) == 1, ErrorKind::precondition,
          "middle basis pair must have intersection 1");
  const auto norm = torus::normalize_middle_basis(evaluate(form, pair.u), evaluate(form, pair.v));
  const auto& t = norm.transform;
  return {Integer(t[0]) * pair.u + Integer(t[2]) * pair.v,
          Integer(t[1]) * pair.u + Integer(t[3]) * pair.v};
}

}  // namespace torelli
