#include "torelli/casson.hpp"

#include "torelli/error.hpp"
#include "torelli/rng.hpp"

#include <algorithm>

namespace torelli {

bool satisfies_seifert_relation(const IntMatrix& l) {
  if (!l.square() || l.rows() % 2 != 0) return false;
  return l.transpose() - l == intersection_matrix(l.rows() / 2);
}

LinkingForm::LinkingForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  require(matrix_.square() && matrix_.rows() % 2 == 0, ErrorKind::dimension,
          "linking form must be 2g x 2g");
  require(satisfies_seifert_relation(matrix_), ErrorKind::precondition,
          "linking form violates L^T - L = J");
}

Integer LinkingForm::operator()(const HVector& x, const HVector& y) const {
  require(x.size() == matrix_.rows() && y.size() == matrix_.rows(), ErrorKind::dimension,
          "linking form argument length");
  Integer total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) total += x[i] * matrix_(i, j) * y[j];
  }
  return total;
}

LinkingForm standard_linking_form(std::size_t genus) {
  require(genus >= 1, ErrorKind::domain, "genus must be positive");
  IntMatrix l(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) l(2 * i + 1, 2 * i) = 1;
  return LinkingForm(std::move(l));
}

LinkingForm pushforward(const LinkingForm& form, const IntMatrix& m) {
  require(m.square() && m.rows() == form.matrix().rows(), ErrorKind::dimension,
          "pushforward: matrix size");
  require(is_symplectic(m), ErrorKind::precondition, "pushforward needs a symplectic matrix");
  return LinkingForm(m.transpose() * form.matrix() * m);
}

IntMatrix psi1_matrix() {
  return {{1, 1, 1, 0, 0, 0},  //
          {0, 1, 1, 0, 0, 0},  //
          {1, 0, 1, 1, 0, 0},  //
          {1, 0, 0, 1, 0, 0},  //
          {0, 0, 0, 0, 1, 0},  //
          {0, 0, 0, 0, 0, 1}};
}

IntMatrix psi3_matrix() {
  return {{1, 0, 0, 0, 0, 0},  //
          {0, 1, 0, 0, 0, 0},  //
          {0, 0, 1, 1, 1, 0},  //
          {0, 0, 0, 1, 1, 0},  //
          {0, 0, 1, 0, 1, 1},  //
          {0, 0, 1, 0, 0, 1}};
}

Integer morita_twist_value(const LinkingForm& form, const HVector& a, const HVector& b) {
  require(intersection(a, b) == 1, ErrorKind::precondition,
          "Morita value needs a symplectic pair (a . b = 1)");
  return form(a, a) * form(b, b) - form(a, b) * form(b, a);
}

namespace {

SummandBasis oriented(const SummandBasis& p) {
  return intersection(p.u, p.v) == 1 ? p : SummandBasis{p.v, p.u};
}

}  // namespace

CycleDescriptor::CycleDescriptor(OrthogonalSplitting splitting)
    : splitting_(std::move(splitting)),
      gamma_(oriented(splitting_[0])),
      delta_(oriented(splitting_[2])) {
  require(is_symmetric_splitting(splitting_), ErrorKind::precondition,
          "cycle descriptors need a symmetric splitting");
}

CycleDescriptor CycleDescriptor::reversed() const {
  return CycleDescriptor(splitting_.reversed());
}

Integer cycle_pairing(const LinkingForm& l1, const LinkingForm& l2, const CycleDescriptor& cycle) {
  const auto& g = cycle.gamma_side();
  const auto& d = cycle.delta_side();
  const Integer g1 = morita_twist_value(l1, g.u, g.v);
  const Integer d1 = morita_twist_value(l1, d.u, d.v);
  const Integer g2 = morita_twist_value(l2, g.u, g.v);
  const Integer d2 = morita_twist_value(l2, d.u, d.v);
  return -(g1 * d2 - d1 * g2);
}

IntMatrix pairing_matrix(const std::vector<CycleDescriptor>& cycles,
                         const std::vector<IntMatrix>& functionals) {
  require(functionals.size() % 2 == 0, ErrorKind::precondition,
          "functionals come in pairs");
  const LinkingForm base = standard_linking_form();
  IntMatrix values(functionals.size() / 2, cycles.size());
  for (std::size_t k = 0; k < values.rows(); ++k) {
    const LinkingForm l1 = pushforward(base, functionals[2 * k]);
    const LinkingForm l2 = pushforward(base, functionals[2 * k + 1]);
    for (std::size_t i = 0; i < cycles.size(); ++i) values(k, i) = cycle_pairing(l1, l2, cycles[i]);
  }
  return values;
}

namespace {

IntMatrix random_word(SeededRng& rng) {
  const std::size_t length = 1 + rng.below(kMaxSearchWordLength);
  return random_sp_element(rng.next(), length);
}

void require_distinct(const std::vector<CycleDescriptor>& cycles) {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      require(unordered_key(cycles[i].splitting()) != unordered_key(cycles[j].splitting()),
              ErrorKind::precondition, "cycles must be pairwise distinct");
}

}  // namespace

IndependenceCertificate find_independence_certificate(const std::vector<CycleDescriptor>& cycles,
                                                      std::uint64_t seed, std::size_t budget,
                                                      const std::vector<FunctionalPair>& hints) {
  require(!cycles.empty(), ErrorKind::precondition, "certificate search needs cycles");
  require_distinct(cycles);
  const std::size_t n = cycles.size();
  const LinkingForm base = standard_linking_form();

  IndependenceCertificate cert{cycles, {}, IntMatrix(0, n), 0};
  SeededRng rng(seed);
  std::size_t hint_index = 0;
  for (std::size_t tried = 0; tried < budget && cert.rank < n; ++tried) {
    FunctionalPair candidate = hint_index < hints.size()
                                   ? hints[hint_index++]
                                   : FunctionalPair{random_word(rng), random_word(rng)};
    const LinkingForm l1 = pushforward(base, candidate.first);
    const LinkingForm l2 = pushforward(base, candidate.second);
    IntMatrix grown(cert.value_matrix.rows() + 1, n);
    for (std::size_t k = 0; k < cert.value_matrix.rows(); ++k)
      for (std::size_t i = 0; i < n; ++i) grown(k, i) = cert.value_matrix(k, i);
    for (std::size_t i = 0; i < n; ++i)
      grown(grown.rows() - 1, i) = cycle_pairing(l1, l2, cycles[i]);
    const std::size_t r = rank(grown);
    if (r > cert.rank) {
      cert.rank = r;
      cert.value_matrix = std::move(grown);
      cert.functionals.push_back(std::move(candidate.first));
      cert.functionals.push_back(std::move(candidate.second));
    }
  }
  require(cert.rank == n, ErrorKind::not_found,
          "budget exhausted at rank " + std::to_string(cert.rank) + " of " + std::to_string(n) +
              " (inconclusive)");
  return cert;
}

std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

CertificateCheck verify_certificate(const IndependenceCertificate& certificate) {
  CertificateCheck out;
  const std::size_t n = certificate.cycles.size();
  if (n == 0) {
    out.detail = "certificate has no cycles";
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unordered_key(certificate.cycles[i].splitting()) ==
          unordered_key(certificate.cycles[j].splitting())) {
        out.detail = "cycles " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        return out;
      }
  if (certificate.functionals.size() % 2 != 0) {
    out.detail = "odd number of functionals";
    return out;
  }
  for (std::size_t k = 0; k < certificate.functionals.size(); ++k) {
    const auto& m = certificate.functionals[k];
    if (!m.square() || m.rows() != 2 * kDefaultGenus || !is_symplectic(m)) {
      out.detail = "functional " + std::to_string(k) + " is not in Sp(6, Z)";
      return out;
    }
  }
  const IntMatrix values = pairing_matrix(certificate.cycles, certificate.functionals);
  if (values != certificate.value_matrix) {
    out.detail = "stored value matrix does not match recomputation";
    return out;
  }
  out.recomputed_rank = rational_rank(values);
  if (out.recomputed_rank != certificate.rank) {
    out.detail = "stored rank " + std::to_string(certificate.rank) + " but recomputed " +
                 std::to_string(out.recomputed_rank);
    return out;
  }
  if (out.recomputed_rank != n) {
    out.detail = "rank " + std::to_string(out.recomputed_rank) + " below cycle count " +
                 std::to_string(n);
    return out;
  }
  out.valid = true;
  out.detail = "rank " + std::to_string(n) + " verified";
  return out;
}

}  // namespace torelli
