#include "ahs/points.hpp"

#include <algorithm>

#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"
#include "ahs/heights.hpp"
#include "ahs/hilbert.hpp"

namespace ahs {

namespace {

bool is_canonical(const std::vector<Natural>& x) {
  Natural g = 0;
  for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g != 1) return false;
  for (const auto& v : x) {
    if (v != 0) return v > 0;
  }
  return false;
}

// Integer coefficients of the primitive representative paired with monomials.
std::vector<std::pair<MultiIndex, Natural>> integer_terms(const HomogPoly& f) {
  std::vector<std::pair<MultiIndex, Natural>> out;
  HomogPoly g = normalize_primitive(f);
  for (const auto& [I, c] : g.terms()) out.emplace_back(I, c.get_num());
  return out;
}

// Rank of the span of f times the degree-(d - delta) monomials, plus v.
std::size_t span_rank(const HomogPoly& f, unsigned long d, const std::vector<Rational>* v) {
  std::vector<std::vector<Rational>> rows;
  if (d >= f.degree()) {
    for (CompositionGenerator g(f.n(), d - f.degree()); !g.done(); g.next()) {
      HomogPoly e(f.n(), d - f.degree());
      e.add_term(g.current(), 1);
      rows.push_back(poly_mul(f, e).coefficient_vector());
    }
  }
  if (v) rows.push_back(*v);
  if (rows.empty()) return 0;
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return rank(m);
}

bool outside_multiples(const HomogPoly& f, unsigned long d, const std::vector<Rational>& v) {
  return span_rank(f, d, &v) > span_rank(f, d, nullptr);
}

}  // namespace

PointSet enumerate_points(const HomogPoly& f, const Rational& B, std::uint64_t cap) {
  if (f.is_zero()) throw DomainError("enumerate_points needs f != 0");
  if (B < 1) throw DomainError("enumerate_points needs B >= 1");
  Natural k = B.get_num() / B.get_den();
  Natural side = 2 * k + 1;
  Natural box;
  mpz_pow_ui(box.get_mpz_t(), side.get_mpz_t(), f.n() + 1);
  if (box > Natural(static_cast<unsigned long>(cap))) {
    throw ResourceError("enumerate_points: " + box.get_str() + " candidate tuples exceed the cap " +
                            std::to_string(cap),
                        "enumeration_cap", static_cast<double>(cap));
  }
  Rational B2 = B * B;
  auto terms = integer_terms(f);
  PointSet set{{}, B, f, 0};
  const long kk = k.get_si();
  std::vector<long> x(f.n() + 1, -kk);
  std::vector<Natural> xz(f.n() + 1);
  while (true) {
    ++set.candidates;
    Natural s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      xz[i] = x[i];
      s += xz[i] * xz[i];
    }
    if (s != 0 && Rational(s) <= B2 && is_canonical(xz)) {
      Natural v = 0;
      for (const auto& [I, c] : terms) v += c * monomial_value(I, xz);
      if (v == 0) set.points.emplace_back(xz);
    }
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == kk) {
      x[i - 1] = -kk;
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  std::sort(set.points.begin(), set.points.end());
  return set;
}

std::uint64_t count_points(const HomogPoly& f, const Rational& B, std::uint64_t cap) {
  return enumerate_points(f, B, cap).points.size();
}

CoveringThreshold covering_threshold(const HomogPoly& f, unsigned long scan_max, const EpsilonSplit& eps,
                                     Precision prec) {
  if (f.n() < 2) throw DomainError("covering_threshold needs n >= 2");
  const unsigned n = f.n();
  const unsigned long delta = f.degree();
  if (delta < 1) throw DomainError("covering_threshold needs delta >= 1");
  CoveringThreshold t;
  t.height = classical_height(f, prec);
  t.b0 = b0_const(n, delta, scan_max, eps, prec);
  Real nd(static_cast<long>(n * delta), prec);
  Real two(2, prec);
  Real dl(static_cast<long>(delta), prec);
  t.log_threshold = t.height / nd + t.b0.value - log(Real(static_cast<long>(n) + 1, prec)) / two -
                    log(Real(static_cast<long>(delta) + 1, prec)) / (two * dl);
  t.threshold = exp(t.log_threshold);
  return t;
}

Real per_degree_threshold(const HomogPoly& f, unsigned long D, Precision prec) {
  HomogPoly g = normalize_primitive(f);
  if (D < g.degree()) throw DomainError("per_degree_threshold needs D >= delta");
  Real slope = slope_FD_exact_sym(g, D, prec).slope;
  Real Dr(static_cast<long>(D), prec);
  Real two(2, prec);
  Real lr = log_natural(rank_r(g.n(), static_cast<long>(D)), prec);
  Real lr1 = log_natural(rank_r1(g.n(), static_cast<long>(D), g.degree()), prec);
  return slope / Dr - lr / (two * Dr) - lr1 / (two * Dr);
}

RationalMatrix monomial_eval_matrix(const std::vector<ProjPoint>& points, unsigned n, unsigned long d) {
  std::vector<MultiIndex> cols = compositions(n, d);
  RationalMatrix m(points.size(), cols.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].n() != n) throw DomainError("point dimension does not match n");
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = monomial_value(cols[j], points[i].coords());
  }
  return m;
}

bool recheck_certificate(const HomogPoly& f, const std::vector<ProjPoint>& points, const CoverCertificate& cert) {
  if (!cert.found || !cert.auxiliary || cert.auxiliary->is_zero()) return false;
  for (const auto& p : points) {
    if (evaluate(*cert.auxiliary, p) != 0) return false;
  }
  return outside_multiples(f, cert.auxiliary->degree(), cert.auxiliary->coefficient_vector());
}

CoverCertificate find_auxiliary(const HomogPoly& f, const std::vector<ProjPoint>& points, unsigned long max_degree) {
  if (max_degree < 1) throw DomainError("find_auxiliary needs max_degree >= 1");
  CoverCertificate cert;
  for (unsigned long d = 1; d <= max_degree; ++d) {
    RationalMatrix m = monomial_eval_matrix(points, f.n(), d);
    std::vector<std::vector<Rational>> basis = kernel_rational(m);
    const std::vector<Rational>* best = nullptr;
    for (const auto& v : basis) {
      if (outside_multiples(f, d, v)) {
        best = &v;
        break;
      }
    }
    if (!best) continue;
    cert.found = true;
    cert.degree = d;
    cert.auxiliary = normalize_primitive(HomogPoly::from_coefficients(f.n(), d, *best));
    cert.vanishing_checked = std::all_of(points.begin(), points.end(),
                                         [&](const ProjPoint& p) { return evaluate(*cert.auxiliary, p) == 0; });
    cert.independence_checked = outside_multiples(f, d, cert.auxiliary->coefficient_vector());
    return cert;
  }
  cert.note = "no form of degree <= " + std::to_string(max_degree) +
              " vanishes on the points outside the multiples of f";
  return cert;
}

CoveringReport verify_covering(const HomogPoly& f, const Rational& B, unsigned long scan_max,
                               const EpsilonSplit& eps, Precision prec, std::uint64_t cap) {
  HomogPoly g = normalize_primitive(f);
  CoveringReport rep;
  rep.B = B;
  rep.threshold = covering_threshold(g, scan_max, eps, prec);
  rep.below_threshold = Real(B, prec).certainly_lt(rep.threshold.threshold);
  if (!rep.below_threshold) {
    rep.status = "threshold not met";
    return rep;
  }
  rep.points = enumerate_points(g, B, cap);
  rep.certificate = find_auxiliary(g, rep.points->points, g.degree());
  if (!rep.certificate->found) {
    rep.status = "no auxiliary form found";
  } else if (!recheck_certificate(g, rep.points->points, *rep.certificate)) {
    rep.status = "certificate failed re-verification";
  } else {
    rep.status = "covered";
  }
  return rep;
}

}  // namespace ahs
