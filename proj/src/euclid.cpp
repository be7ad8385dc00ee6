#include "torelli/euclid.hpp"

#include "torelli/error.hpp"

#include <algorithm>

namespace torelli {

Sl2Matrix::Sl2Matrix(Integer m00, Integer m01, Integer m10, Integer m11)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {
  require(m_[0] * m_[3] - m_[1] * m_[2] == 1, ErrorKind::precondition,
          "SL(2, Z) matrix must have determinant 1");
}

Sl2Matrix Sl2Matrix::r1(const Integer& exponent) { return {1, exponent, 0, 1}; }
Sl2Matrix Sl2Matrix::r2(const Integer& exponent) { return {1, 0, exponent, 1}; }

Sl2Matrix Sl2Matrix::transpose() const { return {m_[0], m_[2], m_[1], m_[3]}; }

Sl2Matrix operator*(const Sl2Matrix& x, const Sl2Matrix& y) {
  return {x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
          x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)};
}

GeneratorWord::GeneratorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_)
    require(l.exponent != 0, ErrorKind::domain, "word letters need nonzero exponents");
}

Sl2Matrix GeneratorWord::evaluate() const {
  Sl2Matrix out;
  for (const auto& l : letters_)
    out = out * (l.generator == Generator::R1 ? Sl2Matrix::r1(l.exponent)
                                              : Sl2Matrix::r2(l.exponent));
  return out;
}

bool GeneratorWord::is_refined() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) {
    return l.generator == Generator::R2 || parity(l.exponent) == 0;
  });
}

std::uint8_t torus_nu(const Integer& p, const Integer& q) {
  return parity(q) & (parity(p) ^ 1u);
}

bool carries_to_standard(const GeneratorWord& word, const Sl2Matrix& x) {
  return word.evaluate() * x.transpose() == Sl2Matrix();
}

namespace {

// Current column matrix [a' b'] as plain integers; left multiplication by a
// generator is a row operation.
struct State {
  Integer p, z;  // row 0: a-coordinates of (a', b')
  Integer q, w;  // row 1: b-coordinates of (a', b')

  Sl2Matrix matrix() const { return {p, z, q, w}; }
};

class Reducer {
 public:
  Reducer(const Sl2Matrix& x, bool refined)
      : refined_(refined), state_{x(0, 0), x(1, 0), x(0, 1), x(1, 1)} {
    trace_.push_back(state_.matrix());
  }

  Reduction run(const Sl2Matrix& x) {
    // Descent on a' = (p, q) until q = 0. The measure |p| + |q| strictly drops.
    while (state_.q != 0) {
      if (state_.p == 0) {
        // a' = (0, +-1); only reachable in the full descent.
        apply(Generator::R1, state_.q);
      } else if (abs(state_.q) >= abs(state_.p)) {
        apply(Generator::R2, -round_div(state_.q, state_.p));
      } else if (refined_) {
        apply(Generator::R1, -2 * round_div(state_.p, 2 * state_.q));
      } else {
        apply(Generator::R1, -round_div(state_.p, state_.q));
      }
    }
    if (state_.p == -1) {
      // (-1, 0) -> (1, 0) through R2, R1^-2, R2; stays inside <R1^2, R2>.
      apply(Generator::R2, 1);
      apply(Generator::R1, -2);
      apply(Generator::R2, 1);
    }
    // Now [[1, z], [0, 1]]; z is even whenever nu(b') = 1.
    apply(Generator::R1, -state_.z);

    std::reverse(applied_.begin(), applied_.end());
    Reduction out{GeneratorWord(std::move(applied_)), 0, std::move(trace_)};
    out.iterations = out.word.size();
    require(carries_to_standard(out.word, x), ErrorKind::internal,
            "reduction word failed verification");
    require(!refined_ || out.word.is_refined(), ErrorKind::internal,
            "refined reduction produced an odd R1 exponent");
    return out;
  }

 private:
  void apply(Generator g, const Integer& e) {
    if (e == 0) return;
    if (g == Generator::R1) {
      state_.p += e * state_.q;
      state_.z += e * state_.w;
    } else {
      state_.q += e * state_.p;
      state_.w += e * state_.z;
    }
    applied_.push_back({g, e});
    trace_.push_back(state_.matrix());
  }

  bool refined_;
  State state_;
  std::vector<Letter> applied_;
  std::vector<Sl2Matrix> trace_;
};

}  // namespace

Reduction reduce_full(const Sl2Matrix& x) { return Reducer(x, false).run(x); }

Reduction reduce_refined(const Sl2Matrix& x) {
  require(torus_nu(x(0, 0), x(0, 1)) == 0, ErrorKind::precondition,
          "refined reduction needs nu(a') = 0");
  require(torus_nu(x(1, 0), x(1, 1)) == 1, ErrorKind::precondition,
          "refined reduction needs nu(b') = 1");
  return Reducer(x, true).run(x);
}

}  // namespace torelli
