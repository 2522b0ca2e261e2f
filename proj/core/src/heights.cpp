#include "ahs/heights.hpp"

#include <optional>

#include "ahs/asymptotics.hpp"
#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"

namespace ahs {

namespace {

Real log_rational(const Rational& q, Precision prec) {
  if (q <= 0) throw DomainError("log of a nonpositive rational");
  if (q == 1) return Real(prec);
  return log(Real(q, prec));
}

Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::kFalse || b == Verdict::kFalse) return Verdict::kFalse;
  if (a == Verdict::kTrue && b == Verdict::kTrue) return Verdict::kTrue;
  return Verdict::kUnknown;
}

}  // namespace

Real classical_height(const HomogPoly& f, Precision prec) {
  HomogPoly g = normalize_primitive(f);
  Natural m = 0;
  for (const auto& [I, c] : g.terms()) {
    Natural a = abs(c.get_num());
    if (a > m) m = a;
  }
  return log_natural(m, prec);
}

Rational bombieri_norm_sq(const HomogPoly& f) {
  if (f.is_zero()) throw DomainError("Bombieri norm of the zero polynomial");
  Natural dfact = factorial(f.degree());
  Rational s = 0;
  for (const auto& [I, c] : f.terms()) s += c * c * Rational(multi_factorial(I), dfact);
  s.canonicalize();
  return s;
}

Real bombieri_norm(const HomogPoly& f, Precision prec) { return sqrt(Real(bombieri_norm_sq(f), prec)); }

Real slope_IX(const HomogPoly& f, Precision prec) {
  return -log_rational(bombieri_norm_sq(normalize_primitive(f)), prec) / Real(2, prec);
}

HeightSlopeReport compare_height_slope(const HomogPoly& f, Precision prec) {
  HomogPoly g = normalize_primitive(f);
  HeightSlopeReport rep;
  Verdict v = refine(
      [&](Precision p) {
        Real h = classical_height(g, p);
        Real neg = -slope_IX(g, p);
        Real l = log(Real(static_cast<long>(g.degree() + 1), p));
        Real n(static_cast<long>(g.n()), p);
        rep.height = h;
        rep.neg_slope = neg;
        rep.lower = h - n * l / Real(2, p);
        rep.upper = h + Real(3, p) * n * l / Real(2, p);
        rep.precision = p;
        return both(compare_le(rep.lower, neg), compare_le(neg, rep.upper));
      },
      prec);
  rep.verdict = v;
  if (v == Verdict::kUnknown) {
    throw CertificationError("height/slope comparison undecided at " + std::to_string(kMaxPrecision) + " bits");
  }
  return rep;
}

Real weil_height(const ProjPoint& p, Precision prec) {
  Natural m = 0;
  for (const auto& x : p.coords()) {
    Natural a = abs(x);
    if (a > m) m = a;
  }
  return log_natural(m, prec);
}

Real arakelov_height(const ProjPoint& p, Precision prec) {
  Natural s = 0;
  for (const auto& x : p.coords()) s += x * x;
  return log_natural(s, prec) / Real(2, prec);
}

HeightReport height_report(const ProjPoint& p, Precision prec) {
  HeightReport rep;
  rep.weil = weil_height(p, prec);
  rep.arakelov = arakelov_height(p, prec);
  rep.multiplicative_H = exp(rep.arakelov);
  // max^2 <= sum x^2 <= (n+1) max^2, decided on the integers.
  Natural mx = 0, sum = 0;
  for (const auto& x : p.coords()) {
    Natural a = abs(x);
    if (a > mx) mx = a;
    sum += x * x;
  }
  bool ok = mx * mx <= sum && sum <= Natural(static_cast<unsigned long>(p.n() + 1)) * mx * mx;
  rep.sandwich = ok ? Verdict::kTrue : Verdict::kFalse;
  return rep;
}

ProductLemmaReport check_product_lemma(const HomogPoly& f, const HomogPoly& g, Precision prec) {
  if (f.n() != g.n()) throw DomainError("product lemma needs the same number of variables");
  if (g.n() == 0) throw DomainError("product lemma needs n >= 1");
  Rational sf = bombieri_norm_sq(f);
  Rational sg = bombieri_norm_sq(g);
  Rational sfg = bombieri_norm_sq(poly_mul(f, g));
  ProductLemmaReport rep;
  rep.upper = sfg <= sf * sg ? Verdict::kTrue : Verdict::kFalse;
  std::optional<Natural> exact_G;
  if (g.degree() <= g.n()) {
    Natural G;
    mpz_ui_pow_ui(G.get_mpz_t(), g.n() + 1, g.n());
    exact_G = G;
  }
  rep.lower = refine(
      [&](Precision p) {
        Real two(2, p);
        rep.log_f = log_rational(sf, p) / two;
        rep.log_g = log_rational(sg, p) / two;
        rep.log_fg = log_rational(sfg, p) / two;
        rep.log_G = log(g_const(g.degree(), g.n(), p));
        // Equality cases never separate as intervals, so decide them exactly.
        if (exact_G) return sf * sg <= sfg * *exact_G ? Verdict::kTrue : Verdict::kFalse;
        return compare_le(rep.log_f + rep.log_g - rep.log_G / two, rep.log_fg);
      },
      prec);
  return rep;
}

}  // namespace ahs
