#pragma once

#include <cstddef>
#include <vector>

#include "ahs/exact.hpp"

namespace ahs {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Determinant of a square matrix by fraction-free Bareiss elimination on the
// matrix scaled to integer entries.
Rational determinant(const RationalMatrix& m);

struct EchelonForm {
  RationalMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

// Reduced row echelon form; pivots are chosen as the first nonzero entry
// scanning columns left to right, so the result is unique.
EchelonForm rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// Basis of {v : M v = 0}, one vector per free column in increasing order,
// with a 1 in that free column and 0 in the other free columns.
std::vector<std::vector<Rational>> kernel_rational(const RationalMatrix& m);

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v);

}  // namespace ahs
