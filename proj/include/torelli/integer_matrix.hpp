#pragma once

#include "torelli/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace torelli {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> column(std::size_t c) const;

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& x);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals, computed by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice: zero rows dropped,
/// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Nonzero Smith invariant factors d1 | d2 | ... of m, all positive.
std::vector<Integer> smith_invariants(const IntMatrix& m);

/// Lexicographic comparison on (rows, cols, entries); a total order.
int compare(const IntMatrix& a, const IntMatrix& b);

}  // namespace torelli
