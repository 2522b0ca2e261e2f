#include "ahs/hilbert.hpp"

#include <optional>

#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"
#include "ahs/heights.hpp"

namespace ahs {

namespace {

Real log_rational(const Rational& q, Precision prec) {
  if (q <= 0) throw DomainError("log of a nonpositive rational");
  if (q == 1) return Real(prec);
  return log(Real(q, prec));
}

Real nat(const Natural& v, Precision prec) { return Real(v, prec); }

void require_primitive(const HomogPoly& f) {
  if (!is_primitive(f)) throw DomainError("f must be primitive; normalize it first");
}

}  // namespace

Rational bombieri_inner(const HomogPoly& p, const HomogPoly& q) {
  if (p.n() != q.n() || p.degree() != q.degree()) {
    throw DomainError("bombieri_inner needs forms of the same degree in the same variables");
  }
  const HomogPoly& small = p.terms().size() <= q.terms().size() ? p : q;
  const HomogPoly& large = &small == &p ? q : p;
  Natural dfact = factorial(p.degree());
  Rational s = 0;
  for (const auto& [I, a] : small.terms()) {
    auto it = large.terms().find(I);
    if (it == large.terms().end()) continue;
    s += a * it->second * Rational(multi_factorial(I), dfact);
  }
  s.canonicalize();
  return s;
}

Real slope_ED_sym(unsigned n, unsigned long D, Precision prec) {
  Natural r = rank_r(n, static_cast<long>(D));
  return c_recurrence(n, D, prec) / (Real(2, prec) * nat(r, prec));
}

Real slope_ED_sym_direct(unsigned n, unsigned long D, Precision prec) {
  Natural dfact = factorial(D);
  Real sum(prec);
  Natural r = 0;
  for (CompositionGenerator g(n, D); !g.done(); g.next()) {
    // Diagonal Gram entry <x^I, x^I> = I!/D!.
    Rational ratio(dfact, multi_factorial(g.current()));
    ratio.canonicalize();
    sum += log_rational(ratio, prec);
    ++r;
  }
  return -sum / (Real(2, prec) * nat(r, prec));
}

RationalMatrix gram_matrix_shifted(const HomogPoly& f, unsigned long D) {
  if (f.degree() > D) throw DomainError("gram_matrix_shifted needs deg f <= D");
  std::vector<HomogPoly> rows;
  for (CompositionGenerator g(f.n(), D - f.degree()); !g.done(); g.next()) {
    HomogPoly e(f.n(), D - f.degree());
    e.add_term(g.current(), 1);
    rows.push_back(poly_mul(f, e));
  }
  RationalMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      m(i, j) = bombieri_inner(rows[i], rows[j]);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

Rational gram_det_shifted(const HomogPoly& f, unsigned long D) {
  require_primitive(f);
  return determinant(gram_matrix_shifted(f, D));
}

namespace {

SlopeResult slope_FD_signed(const HomogPoly& f, unsigned long D, Precision prec, int c_sign) {
  require_primitive(f);
  if (f.n() < 1) throw DomainError("F_D is zero for n = 0");
  SlopeResult res;
  res.D = D;
  if (D < f.degree()) {
    res.slope = slope_ED_sym(f.n(), D, prec);
    if (c_sign < 0) res.slope = -res.slope;
    res.equals_ED = true;
    return res;
  }
  Rational det = gram_det_shifted(f, D);
  if (det <= 0) throw CertificationError("Gram determinant is not positive");
  Real two(2, prec);
  Real c = c_recurrence(f.n(), D, prec);
  if (c_sign < 0) c = -c;
  Natural r1 = rank_r1(f.n(), static_cast<long>(D), f.degree());
  res.slope = (c / two + log_rational(det, prec) / two) / nat(r1, prec);
  return res;
}

BoundPair theorem_bounds_signed(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                                Precision prec, int c_sign, const char* subject) {
  if (delta < 1 || D < delta) throw DomainError("theorem bounds need D >= delta >= 1");
  Real cD = c_recurrence(n, D, prec);
  Real cS = c_recurrence(n, D - delta, prec);
  if (c_sign < 0) {
    cD = -cD;
    cS = -cS;
  }
  Real rs = nat(rank_r(n, static_cast<long>(D - delta)), prec);
  Real r1 = nat(rank_r1(n, static_cast<long>(D), delta), prec);
  Real base = cD - cS - Real(2, prec) * rs * muIX;
  Real scale = Real(2, prec) * r1;
  Real upper = base / scale;
  Real lower = (base - rs * log(g_const(delta, n, prec))) / scale;
  return {lower, upper, subject};
}

}  // namespace

SlopeResult slope_FD_exact_sym(const HomogPoly& f, unsigned long D, Precision prec) {
  return slope_FD_signed(f, D, prec, 1);
}

SlopeResult slope_FD_john(const HomogPoly& f, unsigned long D, Precision prec) {
  SlopeResult res = slope_FD_exact_sym(f, D, prec);
  Real half_log_r = log_natural(rank_r(f.n(), static_cast<long>(D)), prec) / Real(2, prec);
  res.slope = Real::hull(res.slope - half_log_r, res.slope);
  res.frame = SlopeFrame::kJohnInterval;
  return res;
}

BoundPair theorem_bounds_sym(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                             Precision prec) {
  return theorem_bounds_signed(n, delta, muIX, D, prec, 1, "mu(F_D) sym");
}

BoundPair theorem_bounds_john(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                              Precision prec) {
  BoundPair b = theorem_bounds_sym(n, delta, muIX, D, prec);
  Real half_log_r = log_natural(rank_r(n, static_cast<long>(D)), prec) / Real(2, prec);
  return {b.lower - half_log_r, b.upper, "mu(F_D) John"};
}

SlopeResult slope_FD_covolume(const HomogPoly& f, unsigned long D, Precision prec) {
  return slope_FD_signed(f, D, prec, -1);
}

BoundPair theorem_bounds_covolume(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                                  Precision prec) {
  return theorem_bounds_signed(n, delta, muIX, D, prec, -1, "mu(F_D) covolume");
}

SandwichCheck check_theorem_sandwich(const HomogPoly& f, unsigned long D, Precision prec, SandwichVariant variant) {
  require_primitive(f);
  const unsigned n = f.n();
  const unsigned long delta = f.degree();
  if (delta < 1 || D < delta) throw DomainError("the sandwich needs D >= delta >= 1");
  const bool sym = variant == SandwichVariant::kSym;
  SandwichCheck chk;
  Real mu = slope_IX(f, prec);
  chk.slope = sym ? slope_FD_exact_sym(f, D, prec) : slope_FD_covolume(f, D, prec);
  chk.bounds = sym ? theorem_bounds_sym(n, delta, mu, D, prec) : theorem_bounds_covolume(n, delta, mu, D, prec);

  const unsigned long rs = to_ulong(rank_r(n, static_cast<long>(D - delta)));
  Natural sfact = factorial(D - delta);
  Rational prod = 1;
  for (CompositionGenerator g(n, D - delta); !g.done(); g.next()) prod *= Rational(multi_factorial(g.current()), sfact);
  prod.canonicalize();
  Rational norm_sq = bombieri_norm_sq(f);
  Rational norm_pow;
  mpz_pow_ui(mpq_numref(norm_pow.get_mpq_t()), norm_sq.get_num_mpz_t(), rs);
  mpz_pow_ui(mpq_denref(norm_pow.get_mpq_t()), norm_sq.get_den_mpz_t(), rs);
  Rational det = gram_det_shifted(f, D);
  chk.X = sym ? Rational(norm_pow / (det * prod)) : Rational(norm_pow * prod / det);
  chk.X.canonicalize();

  chk.upper = chk.X >= 1 ? Verdict::kTrue : Verdict::kFalse;
  if (delta <= n) {
    Natural G, Gr;
    mpz_ui_pow_ui(G.get_mpz_t(), n + 1, n);
    mpz_pow_ui(Gr.get_mpz_t(), G.get_mpz_t(), rs);
    chk.lower = chk.X <= Rational(Gr) ? Verdict::kTrue : Verdict::kFalse;
  } else {
    chk.lower = refine(
        [&](Precision p) {
          return compare_le(log(Real(chk.X, p)), Real(static_cast<long>(rs), p) * log(g_const(delta, n, p)));
        },
        prec);
  }
  return chk;
}

Real naive_lower(unsigned n, unsigned long D, Precision prec) {
  return -Real(static_cast<long>(D), prec) * log(Real(static_cast<long>(n) + 1, prec)) / Real(2, prec);
}

JiaJiaoReport check_jiajiao(unsigned n, unsigned long D, unsigned long Dp, Precision prec, std::uint64_t cap) {
  if (n < 1) throw DomainError("check_jiajiao needs n >= 1");
  Natural pairs = rank_r(n, static_cast<long>(D)) * rank_r(n, static_cast<long>(Dp));
  if (pairs > Natural(static_cast<unsigned long>(cap))) {
    throw ResourceError("check_jiajiao: " + pairs.get_str() + " composition pairs exceed the cap " +
                            std::to_string(cap),
                        "pair_cap", static_cast<double>(cap));
  }
  JiaJiaoReport rep;
  rep.n = n;
  rep.D = D;
  rep.Dp = Dp;
  Natural total = binomial(D + Dp, D);
  std::vector<MultiIndex> is = compositions(n, D);
  std::vector<MultiIndex> js = compositions(n, Dp);
  bool first = true;
  // Exact inverse of G when it is rational, i.e. D' <= n.
  std::optional<Rational> inv_G;
  if (Dp <= n) {
    Natural G;
    mpz_ui_pow_ui(G.get_mpz_t(), n + 1, n);
    inv_G = Rational(1, G);
  }
  Real G = g_const(Dp, n, prec);
  rep.G = G;
  Real invG_enc = Real(1, prec) / G;
  for (const auto& i : is) {
    for (const auto& j : js) {
      Natural num = 1;
      for (std::size_t k = 0; k <= n; ++k) num *= binomial(i[k] + j[k], i[k]);
      Rational ratio(num, total);
      ratio.canonicalize();
      ++rep.pairs;
      if (first || ratio < rep.min_ratio) {
        rep.min_ratio = ratio;
        rep.argmin_i = i;
        rep.argmin_j = j;
      }
      if (first || ratio > rep.max_ratio) rep.max_ratio = ratio;
      first = false;
      bool below = inv_G ? ratio < *inv_G : Real(ratio, prec).certainly_lt(invG_enc);
      if (below) ++rep.lower_violations;
    }
  }
  rep.upper = rep.max_ratio <= 1 ? Verdict::kTrue : Verdict::kFalse;
  if (inv_G) {
    rep.lower = rep.min_ratio >= *inv_G ? Verdict::kTrue : Verdict::kFalse;
  } else {
    rep.lower = refine([&](Precision p) { return compare_le(Real(1, p) / g_const(Dp, n, p), Real(rep.min_ratio, p)); },
                       prec);
  }
  return rep;
}

Real theorem_b0_lower(unsigned n, unsigned long delta, const Real& muIX, unsigned long D, unsigned long scan_max,
                      const EpsilonSplit& eps, Precision prec) {
  if (n < 2) throw DomainError("theorem_b0_lower needs n >= 2");
  if (D < delta) throw DomainError("theorem_b0_lower needs D >= delta");
  B0Result b0 = b0_const(n, delta, scan_max, eps, prec);
  Real nd(static_cast<long>(n * delta), prec);
  return Real(static_cast<long>(D), prec) * (-muIX / nd + b0.value);
}

}  // namespace ahs
