#include "ahs/linalg.hpp"

#include <utility>

#include "ahs/errors.hpp"

namespace ahs {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  Natural l = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  }
  std::vector<Natural> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Natural& { return a[i * n + j]; };

  int sign = 1;
  Natural prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Natural t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = t;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Natural ln;
  mpz_pow_ui(ln.get_mpz_t(), l.get_mpz_t(), n);
  Rational det(at(n - 1, n - 1) * sign, ln);
  det.canonicalize();
  return det;
}

EchelonForm rref(const RationalMatrix& m) {
  EchelonForm e{m, {}};
  RationalMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> kernel_rational(const RationalMatrix& m) {
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw DomainError("mat_vec dimension mismatch");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

}  // namespace ahs
