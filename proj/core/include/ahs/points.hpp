#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahs/asymptotics.hpp"
#include "ahs/linalg.hpp"
#include "ahs/poly.hpp"

namespace ahs {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000'000;

// Rational points of f = 0 with sqrt(sum x_i^2) <= B, in canonical form and
// sorted lexicographically with the largest coordinates first.
struct PointSet {
  std::vector<ProjPoint> points;
  Rational bound_B;
  HomogPoly hypersurface;
  std::uint64_t candidates = 0;  // integer tuples scanned
};

// Scans the box |x_i| <= floor(B); Throws ResourceError when the box holds
// more than cap tuples and DomainError when B < 1 or f = 0.
PointSet enumerate_points(const HomogPoly& f, const Rational& B, std::uint64_t cap = kDefaultEnumerationCap);
std::uint64_t count_points(const HomogPoly& f, const Rational& B, std::uint64_t cap = kDefaultEnumerationCap);

struct CoveringThreshold {
  Real height;         // classical height h(X)
  Real log_threshold;  // h/(n delta) + B0 - ln(n+1)/2 - ln(delta+1)/(2 delta)
  Real threshold;      // exp(log_threshold)
  B0Result b0;
};

// Needs n >= 2.
CoveringThreshold covering_threshold(const HomogPoly& f, unsigned long scan_max, const EpsilonSplit& eps,
                                     Precision prec);

// Log-height bound slope_FD_exact_sym(f,D)/D - ln r(n,D)/(2D) - ln r1(n,D)/(2D)
// below which the points of X lie on a degree-D hypersurface not containing X.
Real per_degree_threshold(const HomogPoly& f, unsigned long D, Precision prec);

// Rows are points, columns the degree-d monomials in lexicographic order.
RationalMatrix monomial_eval_matrix(const std::vector<ProjPoint>& points, unsigned n, unsigned long d);

struct CoverCertificate {
  bool found = false;
  std::optional<HomogPoly> auxiliary;
  unsigned long degree = 0;
  bool vanishing_checked = false;
  bool independence_checked = false;
  std::string note;
};

// Smallest degree d <= max_degree with a form vanishing on every point and
// lying outside f * (forms of degree d - delta). The first qualifying vector
// of the reduced kernel basis (free columns in monomial order) is returned,
// scaled to a primitive form. A negative result has found = false.
CoverCertificate find_auxiliary(const HomogPoly& f, const std::vector<ProjPoint>& points,
                                unsigned long max_degree);

// Re-checks a certificate by exact evaluation and an exact rank test.
bool recheck_certificate(const HomogPoly& f, const std::vector<ProjPoint>& points, const CoverCertificate& cert);

struct CoveringReport {
  Rational B;
  CoveringThreshold threshold;
  bool below_threshold = false;  // B < threshold, certified
  std::optional<PointSet> points;
  std::optional<CoverCertificate> certificate;
  std::string status;
};

// When B is certainly below the covering threshold, enumerates the points
// and looks for an auxiliary form of degree <= delta. Integrality of X is
// assumed, not checked.
CoveringReport verify_covering(const HomogPoly& f, const Rational& B, unsigned long scan_max,
                               const EpsilonSplit& eps, Precision prec,
                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ahs
