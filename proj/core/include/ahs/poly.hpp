#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ahs/exact.hpp"

namespace ahs {

// Orders monomials lexicographically with the largest exponent vector first,
// so x0^2 precedes x0*x1 precedes x1^2.
struct LexDescending {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return a > b; }
};

// Homogeneous polynomial over Q in variables x0..xn, stored sparsely.
class HomogPoly {
 public:
  using Terms = std::map<MultiIndex, Rational, LexDescending>;

  HomogPoly(unsigned n, unsigned long degree);
  HomogPoly(unsigned n, unsigned long degree, Terms terms);

  unsigned n() const { return n_; }
  unsigned long degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^I; I must have n+1 entries and the polynomial's degree.
  void add_term(const MultiIndex& I, const Rational& c);
  Rational coefficient(const MultiIndex& I) const;

  // Coefficients in the lexicographic monomial basis of this degree.
  std::vector<Rational> coefficient_vector() const;
  static HomogPoly from_coefficients(unsigned n, unsigned long degree, const std::vector<Rational>& coeffs);

  // Canonical text, e.g. "3*x0^2*x1 - 1/2*x2^3"; re-parses to an equal value.
  std::string to_string() const;

  bool operator==(const HomogPoly& o) const = default;

 private:
  unsigned n_;
  unsigned long degree_;
  Terms terms_;
};

// Parses signed terms "c*x0^a0*...*xn^an" with integer or p/q coefficients.
// "*" and "^1" are optional and whitespace is ignored. Throws ParseError.
HomogPoly parse_poly(const std::string& text, unsigned n);
// Same, taking n as the largest variable index that occurs.
HomogPoly parse_poly(const std::string& text);

// Scalar multiple with coprime integer coefficients and a positive leading
// coefficient. Throws DomainError on the zero polynomial.
HomogPoly normalize_primitive(const HomogPoly& f);
bool is_primitive(const HomogPoly& f);

HomogPoly poly_mul(const HomogPoly& f, const HomogPoly& g);
HomogPoly poly_scale(const HomogPoly& f, const Rational& c);

// Projective point with coprime integer coordinates, first nonzero entry > 0.
class ProjPoint {
 public:
  // Canonicalizes the given coordinates; throws DomainError if all are zero.
  explicit ProjPoint(std::vector<Natural> coords);

  unsigned n() const { return static_cast<unsigned>(coords_.size() - 1); }
  const std::vector<Natural>& coords() const { return coords_; }
  std::string to_string() const;

  bool operator==(const ProjPoint& o) const = default;
  // Lexicographic on coordinates, largest first.
  bool operator<(const ProjPoint& o) const { return coords_ > o.coords_; }

 private:
  std::vector<Natural> coords_;
};

// Parses "[a:b:...:c]" with integer entries.
ProjPoint parse_point(const std::string& text);

// Monomial x^I at integer coordinates.
Natural monomial_value(const MultiIndex& I, const std::vector<Natural>& x);
Rational evaluate(const HomogPoly& f, const ProjPoint& p);

}  // namespace ahs
