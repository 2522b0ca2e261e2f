#include "ahs/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"

namespace ahs {

namespace {

Real nat(unsigned long v, Precision prec) { return Real(Natural(v), prec); }
Real rat(const Rational& q, Precision prec) { return Real(q, prec); }
Real rat(long num, long den, Precision prec) {
  Rational q(num, den);
  q.canonicalize();
  return Real(q, prec);
}

Real ln(unsigned long m, Precision prec) { return log_natural(Natural(m), prec); }

// (D + 1/2) as an exact enclosure.
Real d_half(unsigned long D, Precision prec) { return rat(2 * static_cast<long>(D) + 1, 2, prec); }

Real pow_nat(unsigned long base, unsigned long k, Precision prec) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, k);
  return Real(r, prec);
}

Real fact(unsigned long m, Precision prec) { return Real(factorial(m), prec); }

// x^y for x > 0 and rational y.
Real rpow(const Real& x, const Rational& y, Precision prec) {
  if (y == 0) return Real(1, prec);
  return exp(rat(y, prec) * log(x));
}

// Antiderivatives used by the Euler-Maclaurin and C(1,D) bounds.
Real prim_log(const Real& x) { return x * log(x) - x; }
Real prim_xlog(const Real& x) {
  Precision p = x.precision();
  return x * x * log(x) / Real(2, p) - x * x / Real(4, p);
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// A1 and A1' without the n >= 2 precondition; n = 1 enters A2(2, D).
Real a1_lower_raw(unsigned n, unsigned long D, Precision prec) {
  StirlingConstants st = stirling_log_gap(prec);
  Real u = d_half(D, prec);
  return -(pow_nat(2, n + 3, prec) * pow(u, static_cast<long>(n) - 1) * log(u)) - st.gap;
}

Real a1_upper_raw(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec) {
  if (n <= 1) return Real(prec);
  Real u = d_half(D, prec);
  Real nn = nat(n, prec);
  Real first = Real(9, prec) * nn * nat(n - 1, prec) * pow(u, static_cast<long>(n) - 1) * log(u);
  Real lnD = ln(D, prec);
  Rational expo = Rational(2 * static_cast<long>(n) - 1, 2) + 3 * eps.value();
  Real second = nat(n - 1, prec) * pow_nat(2, n, prec) * Real::e(prec) / (Real::pi(prec) * sqrt(nn)) *
                rpow(nat(D, prec), expo, prec) * lnD;
  return first + second;
}

Real a2_raw(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec, bool upper) {
  require(n >= 2, "A2 needs n >= 2");
  require(D >= 1, "A2 needs D >= 1");
  StirlingConstants st = stirling_log_gap(prec);
  Real Dr = nat(D, prec);
  Real lnD = ln(D, prec);
  Real nf = fact(n, prec);
  Real n1f = fact(n - 1, prec);
  Real np1 = nat(n + 1, prec);
  Real Dn1 = pow(Dr, static_cast<long>(n) - 1);
  Real a1n = upper ? a1_upper_raw(n, D, eps, prec) : a1_lower_raw(n, D, prec);
  Real a1n1 = upper ? a1_upper_raw(n - 1, D, eps, prec) : a1_lower_raw(n - 1, D, prec);
  Real coef = st.limit - rat(1, 2 * static_cast<long>(n), prec);
  Real tail = nat(static_cast<unsigned long>(n - 1) * (n - 1), prec) * pow(nat(D - 1, prec), static_cast<long>(n) - 1) * lnD;
  Real r = a1n / nf - np1 * Dn1 * lnD / (Real(4, prec) * n1f) + np1 * coef / (Real(2, prec) * n1f) * Dn1 +
           np1 * a1n1 / (Real(2, prec) * n1f);
  return upper ? r + tail : r - tail;
}

// Polynomial part of the closed-form c_n times n!.
Real closed_form_numerator(unsigned n, Precision prec) {
  Rational nq(n);
  Rational h = harmonic(n);
  Rational poly_h = -nq * nq * nq / 6 - 3 * nq * nq / 4 - 13 * nq / 12 + 2;
  Rational rest = nq * nq * nq / 4 + 17 * nq * nq / 24 + Rational(119, 72) * nq - 4;
  Rational exact = poly_h * h + rest;
  exact.canonicalize();
  Rational log_coef = 1 - nq / 2;
  log_coef.canonicalize();
  return rat(exact, prec) + rat(log_coef, prec) * Real::log2pi(prec);
}

Rational coeff_a_impl(unsigned n) {
  Rational a = (1 - harmonic(n + 1)) / Rational(factorial(n));
  a.canonicalize();
  return a;
}

Rational coeff_b_closed_impl(unsigned n) {
  Rational b(-(static_cast<long>(n) - 2), 1);
  b /= 2 * Rational(factorial(n));
  b.canonicalize();
  return b;
}

Rational coeff_b_derived_impl(unsigned n) {
  Rational b(1, 1);
  b /= 2 * Rational(factorial(n - 1));
  b.canonicalize();
  return b;
}

// ---- A4 memo ------------------------------------------------------------

using A4Key = std::tuple<unsigned, unsigned long, bool, bool, bool, Rational, Precision>;

struct A4Memo {
  std::shared_mutex mutex;
  std::map<A4Key, Real> values;
};

A4Memo& a4_memo() {
  static A4Memo memo;
  return memo;
}

Real a4_side(unsigned n, unsigned long D, bool lower, const A4Convention& conv, const EpsilonSplit& eps,
             Precision prec) {
  if (D == 0) return Real(prec);
  if (n == 1) {
    BoundPair a3 = a3_bounds(D, prec);
    if (lower) return conv.lower_plus ? a3.lower : -a3.lower;
    return conv.upper_prime ? a3.upper : -a3.lower;
  }
  A4Key key{n, D, lower, conv.lower_plus, conv.upper_prime, eps.value(), prec};
  A4Memo& memo = a4_memo();
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;
  }
  Real sum(prec);
  for (unsigned long m = 1; m <= D; ++m) sum += a4_side(n - 1, m, lower, conv, eps, prec);
  // The lower remainder subtracts the upper Q remainder and vice versa.
  Real value = sum - a2_raw(n, D, eps, prec, lower);
  std::unique_lock lock(memo.mutex);
  memo.values.insert_or_assign(key, value);
  return value;
}

// ---- tail majorant for the B0 infimum -----------------------------------

// coef * (D + a)^p * log(D + b)^q with coef >= 0, a, b >= 0, p, q >= 0.
// Each term is nondecreasing in D >= 1.
struct MajorantTerm {
  Real coef;
  Rational a;
  Rational p;
  Rational b;
  unsigned q;
};

using Majorant = std::vector<MajorantTerm>;

void add_term(Majorant& m, const Real& coef, const Rational& a, const Rational& p, const Rational& b, unsigned q) {
  if (coef.is_point() && !coef.certainly_positive() && !coef.certainly_negative()) return;  // exact zero
  m.push_back({abs(coef), a, p, b, q});
}

Majorant scaled(const Majorant& m, const Real& s) {
  Majorant out;
  for (const auto& t : m) out.push_back({t.coef * abs(s), t.a, t.p, t.b, t.q});
  return out;
}

void append(Majorant& dst, const Majorant& src) { dst.insert(dst.end(), src.begin(), src.end()); }

Majorant maj_a1(unsigned n, const EpsilonSplit& eps, Precision prec, bool upper) {
  Majorant m;
  Rational half(1, 2);
  if (!upper) {
    add_term(m, pow_nat(2, n + 3, prec), half, Rational(static_cast<long>(n) - 1), half, 1);
    add_term(m, stirling_log_gap(prec).gap, 0, 0, 0, 0);
    return m;
  }
  if (n <= 1) return m;
  Real nn = nat(n, prec);
  add_term(m, Real(9, prec) * nn * nat(n - 1, prec), half, Rational(static_cast<long>(n) - 1), half, 1);
  Rational expo = Rational(2 * static_cast<long>(n) - 1, 2) + 3 * eps.value();
  expo.canonicalize();
  add_term(m, nat(n - 1, prec) * pow_nat(2, n, prec) * Real::e(prec) / (Real::pi(prec) * sqrt(nn)), 0, expo, 0, 1);
  return m;
}

Majorant maj_a2(unsigned n, const EpsilonSplit& eps, Precision prec, bool upper) {
  StirlingConstants st = stirling_log_gap(prec);
  Real nf = fact(n, prec);
  Real n1f = fact(n - 1, prec);
  Real np1 = nat(n + 1, prec);
  Rational pn1(static_cast<long>(n) - 1);
  Majorant m = scaled(maj_a1(n, eps, prec, upper), Real(1, prec) / nf);
  add_term(m, np1 / (Real(4, prec) * n1f), 0, pn1, 0, 1);
  add_term(m, np1 * (st.limit - rat(1, 2 * static_cast<long>(n), prec)) / (Real(2, prec) * n1f), 0, pn1, 0, 0);
  append(m, scaled(maj_a1(n - 1, eps, prec, upper), np1 / (Real(2, prec) * n1f)));
  // (D - 1)^{n-1} <= D^{n-1}.
  add_term(m, nat(static_cast<unsigned long>(n - 1) * (n - 1), prec), 0, pn1, 0, 1);
  return m;
}

// |A3(D)| <= |5/8 + K + c1| + 1/4 + (log(3/2) + 1)/8 + 1/8 + (3/8) log(D + 1/2)
// with K = (9/4) log(3/2) - 9/8, using (u log u - D log D) <= (log u + 1)/2.
Majorant maj_a3(Precision prec, bool prime) {
  StirlingConstants st = stirling_log_gap(prec);
  Real l32 = log(rat(3, 2, prec));
  Real K = rat(9, 4, prec) * l32 - rat(9, 8, prec);
  Real c0 = abs(rat(5, 8, prec) + K + st.limit) + rat(1, 4, prec) + (l32 + Real(1, prec)) / Real(8, prec) +
            rat(1, 8, prec);
  Majorant m;
  Rational half(1, 2);
  add_term(m, c0, 0, 0, 0, 0);
  add_term(m, rat(3, 8, prec), half, 0, half, 1);
  if (prime) {
    add_term(m, rat(5, 3, prec), 0, half, 0, 0);
    Real pi = Real::pi(prec);
    add_term(m, rat(1, 4, prec) + pi * pi / Real(6, prec), 0, 0, 0, 0);
  }
  return m;
}

Majorant maj_a4(unsigned n, bool lower, const A4Convention& conv, const EpsilonSplit& eps, Precision prec) {
  if (n == 1) return maj_a3(prec, !lower && conv.upper_prime);
  // sum_{m=1}^{D} M(m) <= D M(D) <= (D + a)^{p+1} ... for nondecreasing M.
  Majorant m;
  for (auto t : maj_a4(n - 1, lower, conv, eps, prec)) {
    t.p += 1;
    m.push_back(t);
  }
  append(m, maj_a2(n, eps, prec, lower));
  return m;
}

Real eval_term(const MajorantTerm& t, unsigned long D, Precision prec) {
  Real base = nat(D, prec) + rat(t.a, prec);
  Real v = t.coef * rpow(base, t.p, prec);
  if (t.q > 0) v *= pow(log(nat(D, prec) + rat(t.b, prec)), static_cast<long>(t.q));
  return v;
}

// t(D) / D^n is nonincreasing for D >= D0 when p < n and
// p + q / log(D0 + b) < n.
bool term_over_power_decreasing(const MajorantTerm& t, unsigned n, unsigned long D0, Precision prec) {
  Rational gap = Rational(n) - t.p;
  if (gap <= 0) return false;
  if (t.q == 0) return true;
  Real lhs = log(nat(D0, prec) + rat(t.b, prec));
  Rational need = Rational(t.q) / gap;
  need.canonicalize();
  return rat(need, prec).certainly_lt(lhs);
}

}  // namespace

// ---- public API -----------------------------------------------------------

Rational coeff_a(unsigned n) { return coeff_a_impl(n); }
Rational coeff_b_closed(unsigned n) { return coeff_b_closed_impl(n); }
Rational coeff_b_derived(unsigned n) { return coeff_b_derived_impl(n); }

Rational coeff_a_step(const Rational& a_prev, unsigned n) {
  Rational a = a_prev / (n + 1) - harmonic(n) / Rational(factorial(n + 1));
  a.canonicalize();
  return a;
}

Rational coeff_b_step(const Rational& b_prev, unsigned n) {
  Rational b = b_prev / n - Rational(1) / (2 * Rational(factorial(n)));
  b.canonicalize();
  return b;
}

Real a3_abs_majorant(unsigned long D, bool prime, Precision prec) {
  Real sum(prec);
  for (const auto& t : maj_a3(prec, prime)) sum += eval_term(t, D, prec);
  return sum;
}

Real a4_abs_majorant(unsigned n, unsigned long D, bool lower, const EpsilonSplit& eps, Precision prec,
                     const A4Convention& conv) {
  Real sum(prec);
  for (const auto& t : maj_a4(n, lower, conv, eps, prec)) sum += eval_term(t, D, prec);
  return sum;
}

EpsilonSplit::EpsilonSplit() : value_(1, 12) {}

EpsilonSplit::EpsilonSplit(const Rational& value) : value_(value) {
  value_.canonicalize();
  if (!(value_ > 0 && value_ < Rational(1, 6))) {
    throw DomainError("epsilon must lie in (0, 1/6), got " + value_.get_str());
  }
}

const char* to_string(CoeffSource s) {
  switch (s) {
    case CoeffSource::kClosedForm:
      return "closed_form";
    case CoeffSource::kRecursion:
      return "recursion";
    case CoeffSource::kDerived:
      return "derived";
  }
  return "?";
}

std::string A4Convention::name() const {
  std::string lo = lower_plus ? "+A3" : "-A3";
  std::string hi = upper_prime ? "+A3'" : "-A3";
  return "(" + lo + "," + hi + ")";
}

std::array<A4Convention, 4> A4Convention::candidates() {
  return {A4Convention{true, true}, A4Convention{false, true}, A4Convention{true, false}, A4Convention{false, false}};
}

StirlingConstants stirling_log_gap(Precision prec) {
  Real half_l2pi = Real::log2pi(prec) / Real(2, prec);
  Real limit = half_l2pi - Real(1, prec);
  Real gap = rat(3, 2, prec) * log(rat(3, 2, prec)) + rat(1, 2, prec) - half_l2pi;
  return {limit, gap};
}

Real g_const(unsigned long Dp, unsigned n, Precision prec) {
  require(n >= 1, "G(D', n) needs n >= 1");
  if (Dp <= n) return pow_nat(n + 1, n, prec);
  Real num = exp(nat(2 * static_cast<unsigned long>(n) + 3, prec)) * sqrt(pow(nat(Dp, prec), n));
  Real twopi = Real(2, prec) * Real::pi(prec);
  Real den = sqrt(pow(twopi, n + 3)) * sqrt(pow(nat(n + 1, prec), n + 1));
  return num / den;
}

BoundPair r0_bounds(unsigned n, unsigned long D, Precision prec) {
  Natural r = rank_r(n, static_cast<long>(D));
  return {Real(prec), log_natural(r, prec) / Real(2, prec), "R0(n,D)"};
}

BoundPair em_bounds(EmKind kind, unsigned long p, unsigned long q, Precision prec) {
  require(p >= 1 && p <= q, "em_bounds needs 1 <= p <= q");
  Real a = rat(2 * static_cast<long>(p) - 1, 2, prec);
  Real b = rat(2 * static_cast<long>(q) + 1, 2, prec);
  Real count = nat(q - p + 1, prec);
  Real eighth = rat(1, 8, prec);
  Real main(prec), err(prec);
  if (kind == EmKind::kLogX) {
    main = prim_log(b) - prim_log(a) + eighth * (Real(1, prec) / a - Real(1, prec) / b);
    err = count / (a * a);
  } else {
    main = prim_xlog(b) - prim_xlog(a) + eighth * (log(a) - log(b));
    err = count / a;
  }
  return {main - err, main + err, kind == EmKind::kLogX ? "sum log m" : "sum m log m"};
}

BoundPair a1_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec) {
  require(n >= 2 && D >= 2, "A1 needs n >= 2 and D >= 2");
  return {a1_lower_raw(n, D, prec), a1_upper_raw(n, D, eps, prec), "A1(n,D)"};
}

BoundPair s_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec) {
  require(n >= 2 && D >= 2, "S sandwich needs n >= 2 and D >= 2");
  StirlingConstants st = stirling_log_gap(prec);
  Real Dr = nat(D, prec);
  Real Dn = pow(Dr, n);
  Real main = rat(harmonic(n), prec) * Dn * Dr / nat(n + 1, prec) - Dn * ln(D, prec) / Real(2, prec) +
              (st.limit - rat(1, 2 * static_cast<long>(n), prec)) * Dn;
  BoundPair a1 = a1_bounds(n, D, eps, prec);
  return {main + a1.lower, main + a1.upper, "S(n,D)"};
}

BoundPair a2_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec) {
  require(n >= 2 && D >= 2, "A2 needs n >= 2 and D >= 2");
  return {a2_raw(n, D, eps, prec, false), a2_raw(n, D, eps, prec, true), "A2(n,D)"};
}

BoundPair q_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec) {
  require(n >= 2 && D >= 2, "Q sandwich needs n >= 2 and D >= 2");
  StirlingConstants st = stirling_log_gap(prec);
  Real Dr = nat(D, prec);
  Real Dn = pow(Dr, n);
  Real nf = fact(n, prec);
  Real coef = st.limit - rat(1, 2 * static_cast<long>(n), prec) +
              nat(n + 1, prec) * rat(harmonic(n - 1), prec) / Real(2, prec);
  Real main = rat(harmonic(n), prec) * Dn * Dr / fact(n + 1, prec) - Dn * ln(D, prec) / (Real(2, prec) * nf) +
              coef * Dn / nf;
  BoundPair a2 = a2_bounds(n, D, eps, prec);
  return {main + a2.lower, main + a2.upper, "Q(n,D)"};
}

Real a3_definition(unsigned long D, Precision prec) {
  StirlingConstants st = stirling_log_gap(prec);
  Real u = d_half(D, prec);
  Real Dr = nat(D, prec);
  Real Dp1 = nat(D + 1, prec);
  Real two = Real(2, prec);
  Real integrals = two * (prim_xlog(u) - prim_xlog(rat(3, 2, prec))) - Dp1 * (prim_log(u) - prim_log(Real(1, prec))) -
                   Dp1 * st.limit;
  Real main = Dr * Dr / two - Dr * ln(D, prec) / two - st.limit * Dr;
  return integrals - main;
}

Real a3_reduced(unsigned long D, Precision prec) {
  StirlingConstants st = stirling_log_gap(prec);
  Real u = d_half(D, prec);
  Real Dr = nat(D, prec);
  Real two = Real(2, prec);
  Real K = rat(9, 4, prec) * log(rat(3, 2, prec)) - rat(9, 8, prec);
  return -(u * log(u)) / two + Dr * ln(D, prec) / two - rat(5, 8, prec) - K - st.limit;
}

BoundPair a3_bounds(unsigned long D, Precision prec) {
  require(D >= 1, "A3 needs D >= 1");
  Real one(1, prec);
  Real eighth = rat(1, 8, prec);
  Natural s;
  mpz_sqrt(s.get_mpz_t(), Natural(D).get_mpz_t());
  Real sh = Real(s, prec) + rat(1, 2, prec);
  Real base = a3_reduced(D, prec) + eighth * (log(rat(3, 2, prec)) + one) - eighth * (log(sh) + one) +
              eighth * (log(sh) + one) - eighth * (log(d_half(D, prec)) + one);
  Real sqrtD = sqrt(nat(D, prec));
  Real pi = Real::pi(prec);
  Real prime = base + Real(2, prec) * sqrtD / Real(3, prec) + sqrtD + rat(1, 4, prec) + pi * pi / Real(6, prec);
  return {base, prime, "A3(D)"};
}

BoundPair c1_bounds(unsigned long D, Precision prec) {
  require(D >= 2, "C(1,D) sandwich needs D >= 2");
  StirlingConstants st = stirling_log_gap(prec);
  Real Dr = nat(D, prec);
  Real main = -(Dr * Dr) / Real(2, prec) + Dr * ln(D, prec) / Real(2, prec) + st.limit * Dr;
  BoundPair a3 = a3_bounds(D, prec);
  return {main + a3.lower, main + a3.upper, "C(1,D)"};
}

BoundPair a4_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec, const A4Convention& conv) {
  require(n >= 1, "A4 needs n >= 1");
  return {a4_side(n, D, true, conv, eps, prec), a4_side(n, D, false, conv, eps, prec), "A4(n,D)"};
}

CoeffTriple c_main_coeffs(unsigned n, CoeffSource source, Precision prec) {
  require(n >= 1, "coefficients need n >= 1");
  StirlingConstants st = stirling_log_gap(prec);
  CoeffTriple t{coeff_a_impl(n), source == CoeffSource::kDerived ? coeff_b_derived_impl(n) : coeff_b_closed_impl(n), Real(prec)};
  switch (source) {
    case CoeffSource::kClosedForm:
      t.c = closed_form_numerator(n, prec) / fact(n, prec);
      break;
    case CoeffSource::kRecursion:
    case CoeffSource::kDerived: {
      bool derived = source == CoeffSource::kDerived;
      Real c = st.limit;
      for (unsigned k = 2; k <= n; ++k) {
        Rational a_prev = coeff_a_impl(k - 1);
        Rational b_prev = derived ? coeff_b_derived_impl(k - 1) : coeff_b_closed_impl(k - 1);
        Real kk = nat(k, prec);
        Real inner = st.limit - rat(1, 2 * static_cast<long>(k), prec) +
                     nat(k + 1, prec) * rat(harmonic(k - 1), prec) / Real(2, prec);
        Real tail = inner / fact(k, prec);
        if (derived) {
          c = c / kk - rat(b_prev, prec) / (kk * kk) + rat(a_prev, prec) / Real(2, prec) - tail;
        } else {
          c = c / kk + rat(b_prev, prec) / (kk * kk) + nat(k + 1, prec) * rat(a_prev, prec) / Real(2, prec) - tail;
        }
      }
      t.c = c;
      break;
    }
  }
  return t;
}

BoundPair c_bounds_with(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec, CoeffSource source,
                        const A4Convention& conv) {
  require(n >= 1 && D >= 2, "C(n,D) sandwich needs n >= 1 and D >= 2");
  CoeffTriple t = c_main_coeffs(n, source, prec);
  Real Dr = nat(D, prec);
  Real Dn = pow(Dr, n);
  Real main = rat(t.a, prec) * Dn * Dr + rat(t.b, prec) * Dn * ln(D, prec) + t.c * Dn;
  BoundPair a4 = a4_bounds(n, D, eps, prec, conv);
  return {main + a4.lower, main + a4.upper, "C(n,D)"};
}

std::string SandwichResolution::summary() const {
  std::ostringstream os;
  os << "source=" << to_string(source) << " convention=" << convention.name()
     << (validated ? " validated" : " NOT validated");
  return os.str();
}

const SandwichResolution& resolve_c_sandwich(const EpsilonSplit& eps, Precision prec) {
  static std::mutex mutex;
  static std::map<std::pair<Rational, Precision>, SandwichResolution> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(eps.value(), prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  struct GridRow {
    unsigned n;
    unsigned long d_max;
  };
  const GridRow grid[] = {{1, 200}, {2, 60}, {3, 60}};
  SandwichResolution res;
  for (CoeffSource src : {CoeffSource::kClosedForm, CoeffSource::kRecursion, CoeffSource::kDerived}) {
    for (const A4Convention& conv : A4Convention::candidates()) {
      CandidateOutcome out{src, conv, 0, 0, {}};
      for (const GridRow& row : grid) {
        for (unsigned long D = 4; D <= row.d_max; ++D) {
          Real exact = c_recurrence(row.n, D, prec);
          BoundPair bp = c_bounds_with(row.n, D, eps, prec, src, conv);
          ++out.checked;
          if (!bp.certifies(exact)) {
            ++out.failures;
            if (out.first_failure.empty()) {
              out.first_failure = "n=" + std::to_string(row.n) + " D=" + std::to_string(D) +
                                  (bp.lower.certainly_le(exact) ? " upper" : " lower");
            }
          }
        }
      }
      res.candidates.push_back(out);
    }
  }
  for (CoeffSource src : {CoeffSource::kClosedForm, CoeffSource::kRecursion, CoeffSource::kDerived}) {
    std::vector<A4Convention> passing;
    for (const auto& c : res.candidates) {
      if (c.source == src && c.failures == 0) passing.push_back(c.convention);
    }
    if (passing.empty()) continue;
    res.source = src;
    res.convention = passing.front();
    for (const auto& c : passing) {
      if (c == A4Convention{true, true}) res.convention = c;
    }
    res.validated = true;
    break;
  }
  if (!res.validated) {
    res.source = CoeffSource::kDerived;
    res.convention = A4Convention{true, true};
  }
  return cache.emplace(key, std::move(res)).first->second;
}

BoundPair c_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec) {
  const SandwichResolution& res = resolve_c_sandwich(eps, prec);
  return c_bounds_with(n, D, eps, prec, res.source, res.convention);
}

EmpiricalEstimate c_coeff_samples(unsigned n, unsigned long D_max, Precision prec, CoeffSource b_source) {
  require(n >= 1 && n <= 3, "empirical estimator supports n in {1,2,3}");
  require(D_max >= 50, "empirical estimator needs D_max >= 50");
  CoeffTriple t = c_main_coeffs(n, b_source, prec);
  EmpiricalEstimate est{{D_max / 2, 3 * D_max / 4, D_max}, {Real(prec), Real(prec), Real(prec)}, 0, Real(prec)};
  for (int i = 0; i < 3; ++i) {
    unsigned long D = est.D[i];
    Real Dr = nat(D, prec);
    Real Dn = pow(Dr, n);
    Real c = c_recurrence(n, D, prec);
    est.samples[i] = (c - rat(t.a, prec) * Dn * Dr - rat(t.b, prec) * Dn * ln(D, prec)) / Dn;
  }
  Real lo = min(min(est.samples[0], est.samples[1]), est.samples[2]);
  Real hi = max(max(est.samples[0], est.samples[1]), est.samples[2]);
  Real spread = hi - lo;
  est.spread = spread.hi_double();
  Real s = Real::hull(Real(prec), spread);
  est.value = Real::hull(est.samples[2] - s, est.samples[2] + s);
  return est;
}

Real c_coeff_empirical(unsigned n, unsigned long D_max, Precision prec, CoeffSource b_source, double tolerance) {
  EmpiricalEstimate est = c_coeff_samples(n, D_max, prec, b_source);
  if (est.spread > tolerance) {
    std::ostringstream os;
    os << "c_n estimator did not converge for n=" << n << ", D_max=" << D_max << ": spread " << est.spread
       << " exceeds " << tolerance << "; samples";
    for (int i = 0; i < 3; ++i) os << " D=" << est.D[i] << ":" << est.samples[i].mid_double();
    throw CertificationError(os.str());
  }
  return est.value;
}

unsigned long default_scan_max(unsigned long delta) { return 10 * delta + 100; }

B0Result b0_const(unsigned n, unsigned long delta, unsigned long scan_max, const EpsilonSplit& eps, Precision prec) {
  return b0_const(n, delta, scan_max, eps, prec, resolve_c_sandwich(eps, prec).convention);
}

B0Result b0_const(unsigned n, unsigned long delta, unsigned long scan_max, const EpsilonSplit& eps, Precision prec,
                  const A4Convention& conv) {
  require(n >= 2, "B0 needs n >= 2");
  require(delta >= 1, "B0 needs delta >= 1");
  require(scan_max >= delta, "B0 needs scan_max >= delta");
  Real one(1, prec);
  Real two_pow = pow_nat(2, n - 1, prec);
  Real nf = fact(n, prec);
  Real n1f = fact(n - 1, prec);
  Real np1 = nat(n + 1, prec);

  Real r_ratio = Real(rank_r(n, static_cast<long>(delta) + 1), prec) / np1 - one;
  Real closed = -(log(g_const(delta, n, prec)) / r_ratio);
  closed -= log(np1) / Real(2, prec);
  closed += rat(1 - harmonic(n + 1), prec) * np1 / (two_pow * nf);
  closed -= Real(static_cast<long>(n) - 2, prec) / (Real(2, prec) * two_pow * n1f);
  closed += closed_form_numerator(n, prec) / (two_pow * n1f * nat(delta + 1, prec));

  B0Result out;
  out.closed_part = closed;
  out.scan_max = scan_max;
  out.convention = conv;
  Real denom_base = two_pow * nat(delta, prec);
  bool first = true;
  for (unsigned long D = delta; D <= scan_max; ++D) {
    Real num = a4_side(n, D, true, conv, eps, prec) - a4_side(n, D - delta, false, conv, eps, prec);
    Real v = num / (denom_base * pow(nat(D, prec), n));
    if (first || v.mid_double() < out.scan_min.mid_double()) out.argmin_D = D;
    out.scan_min = first ? v : min(out.scan_min, v);
    first = false;
  }

  Majorant tail = maj_a4(n, true, conv, eps, prec);
  append(tail, maj_a4(n, false, conv, eps, prec));
  bool decreasing = true;
  Real tail_sum(prec);
  for (const auto& t : tail) {
    if (!term_over_power_decreasing(t, n, scan_max, prec)) decreasing = false;
    tail_sum += eval_term(t, scan_max, prec);
  }
  out.tail_bound = tail_sum / (denom_base * pow(nat(scan_max, prec), n));
  out.tail_decreasing = decreasing;
  if (!decreasing) {
    throw CertificationError("B0 tail majorant is not provably decreasing at scan_max=" + std::to_string(scan_max) +
                             "; use a larger scan_max");
  }
  out.inf_lower = min(out.scan_min, -out.tail_bound);
  out.value = closed + out.inf_lower;
  return out;
}

}  // namespace ahs
