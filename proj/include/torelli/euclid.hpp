#pragma once

// Reduction of symplectic bases of Z^2 = <a, b> to the standard basis by
// words in R1 = [[1, 1], [0, 1]] and R2 = [[1, 0], [1, 1]].
//
// Convention. A matrix X = [[x1, x2], [y1, y2]] encodes the basis
// a' = x1 a + x2 b, b' = y1 a + y2 b (rows are basis vectors). Generators act
// on coordinate columns, and a word w carries a basis B to B' when
// eval(w) * columns(B) = columns(B'). A word is stored most-significant
// letter first: eval(w) = L_0 * L_1 * ... * L_{k-1}, so the last letter is
// applied first.

#include "torelli/integer.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace torelli {

class Sl2Matrix {
 public:
  Sl2Matrix() : Sl2Matrix(1, 0, 0, 1) {}
  /// Throws a precondition error unless the determinant is 1.
  Sl2Matrix(Integer m00, Integer m01, Integer m10, Integer m11);

  static Sl2Matrix r1(const Integer& exponent = 1);
  static Sl2Matrix r2(const Integer& exponent = 1);

  const Integer& operator()(int r, int c) const { return m_[2 * r + c]; }
  Sl2Matrix transpose() const;

  friend Sl2Matrix operator*(const Sl2Matrix& x, const Sl2Matrix& y);
  friend bool operator==(const Sl2Matrix&, const Sl2Matrix&) = default;

 private:
  std::array<Integer, 4> m_;
};

enum class Generator : std::uint8_t { R1, R2 };

struct Letter {
  Generator generator;
  Integer exponent;  // nonzero
  friend bool operator==(const Letter&, const Letter&) = default;
};

class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Sl2Matrix evaluate() const;
  /// Every R1 letter has an even exponent, i.e. the word lies in <R1^2, R2>.
  bool is_refined() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Reduction {
  GeneratorWord word;
  /// Number of reduction steps, endgame included (equals word length).
  std::size_t iterations = 0;
  /// Column matrix of the current basis after each step, starting with the input.
  std::vector<Sl2Matrix> trace;
};

/// nu(p a + q b) with nu(a) = 0, nu(b) = 1: q (1 + p) mod 2.
std::uint8_t torus_nu(const Integer& p, const Integer& q);

/// Carries the basis encoded by `x` to (a, b) with any SL(2, Z) word.
Reduction reduce_full(const Sl2Matrix& x);

/// Carries the basis encoded by `x` to (a, b) with a word in <R1^2, R2>.
/// Requires nu(a') = 0 and nu(b') = 1.
Reduction reduce_refined(const Sl2Matrix& x);

/// True iff eval(word) maps the columns of x^T to the identity.
bool carries_to_standard(const GeneratorWord& word, const Sl2Matrix& x);

}  // namespace torelli
