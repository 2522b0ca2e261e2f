#include "ahs/enclosure.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ahs/errors.hpp"

namespace ahs {

namespace {

std::string format_endpoint(mpfr_srcptr x, int digits, bool upward) {
  if (mpfr_zero_p(x)) return "0";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(x)) return "nan";
  char* buf = nullptr;
  if (upward) {
    mpfr_asprintf(&buf, "%.*RUe", digits - 1, x);
  } else {
    mpfr_asprintf(&buf, "%.*RDe", digits - 1, x);
  }
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// Parses a decimal literal such as "-12.5e-3" or a fraction "p/q" into an
// exact rational.
mpq_class parse_exact(const std::string& raw) {
  std::string t;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw ParseError("empty number", 0);
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    mpz_class num, den;
    if (num.set_str(t.substr(0, slash), 10) != 0) throw ParseError("bad numerator '" + raw + "'", 0);
    if (den.set_str(t.substr(slash + 1), 10) != 0) throw ParseError("bad denominator '" + raw + "'", slash + 1);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    q = mpq_class(num, den);
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (t[pos] == '+' || t[pos] == '-') neg = t[pos++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < t.size() && t[pos] != 'e' && t[pos] != 'E'; ++pos) {
    char c = t[pos];
    if (c == '.') {
      if (seen_point) throw ParseError("second decimal point", pos);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in number", pos);
    }
  }
  if (!any_digit) throw ParseError("number without digits", pos);
  long exponent = 0;
  if (pos < t.size()) {
    std::size_t used = 0;
    try {
      exponent = std::stol(t.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent", pos + 1);
    }
    if (pos + 1 + used != t.size()) throw ParseError("trailing characters in exponent", pos + 1 + used);
  }
  mpz_class m(digits, 10);
  long shift = exponent - frac_digits;
  mpz_class ten = 10, p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift >= 0 ? mpq_class(m * p) : mpq_class(m, p);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

}  // namespace

Precision clamp_precision(long bits) {
  return static_cast<Precision>(std::clamp<long>(bits, kMinPrecision, kMaxPrecision));
}

void Real::init(Precision prec) {
  prec_ = prec;
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Real::Real(Precision prec) {
  init(prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Real::Real(long v, Precision prec) {
  init(prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Real::Real(const mpz_class& v, Precision prec) {
  init(prec);
  mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Real::Real(const mpq_class& v, Precision prec) {
  init(prec);
  mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Real::Real(const Real& other) {
  init(other.prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Real::Real(Real&& other) noexcept {
  init(other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(hi_, other.prec_);
    prec_ = other.prec_;
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Real::~Real() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Real::promote(Precision prec) {
  if (prec <= prec_) return;
  // Raising precision keeps the stored values exactly.
  mpfr_prec_round(lo_, prec, MPFR_RNDD);
  mpfr_prec_round(hi_, prec, MPFR_RNDU);
  prec_ = prec;
}

Real Real::hull(const Real& a, const Real& b) {
  Real r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Real Real::from_strings(const std::string& lo, const std::string& hi, Precision prec) {
  Real a = parse(lo, prec);
  Real b = parse(hi, prec);
  if (mpfr_greater_p(a.lo_, b.hi_)) throw DomainError("interval with lo > hi");
  return hull(a, b);
}

Real Real::parse(const std::string& text, Precision prec) {
  return Real(parse_exact(text), prec);
}

Real Real::pi(Precision prec) {
  Real r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Real Real::log2pi(Precision prec) { return log(Real(2, prec) * pi(prec)); }

Real Real::e(Precision prec) { return exp(Real(1, prec)); }

Real& Real::operator+=(const Real& b) {
  promote(b.prec_);
  mpfr_add(lo_, lo_, b.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, b.hi_, MPFR_RNDU);
  return *this;
}

Real& Real::operator-=(const Real& b) {
  promote(b.prec_);
  // x - x: both endpoints come from the old lo and hi of x.
  if (&b == this) {
    mpfr_sub(lo_, lo_, hi_, MPFR_RNDD);
    mpfr_neg(hi_, lo_, MPFR_RNDU);
    return *this;
  }
  mpfr_sub(lo_, lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, b.lo_, MPFR_RNDU);
  return *this;
}

Real& Real::operator*=(const Real& b) {
  Precision p = std::max(prec_, b.prec_);
  Real a(*this);
  Real c(b);
  a.promote(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {c.lo_, c.hi_};
  promote(p);
  mpfr_set_inf(lo_, 1);
  mpfr_set_inf(hi_, -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      mpfr_min(lo_, lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      mpfr_max(hi_, hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return *this;
}

Real& Real::operator/=(const Real& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw DomainError("division by an interval containing zero");
  }
  Precision p = std::max(prec_, b.prec_);
  Real a(*this);
  Real c(b);
  a.promote(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {c.lo_, c.hi_};
  promote(p);
  mpfr_set_inf(lo_, 1);
  mpfr_set_inf(hi_, -1);
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      mpfr_min(lo_, lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      mpfr_max(hi_, hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return *this;
}

Real Real::operator-() const {
  Real r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Real log(const Real& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("log of an interval not strictly positive");
  Real r(x.prec_);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real exp(const Real& x) {
  Real r(x.prec_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real sqrt(const Real& x) {
  if (mpfr_sgn(x.hi_) < 0) throw DomainError("sqrt of a negative interval");
  Real r(x.prec_);
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real abs(const Real& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Real r(x.prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real pow(const Real& x, long k) {
  if (k == 0) return Real(1, x.prec_);
  if (k < 0) return Real(1, x.prec_) / pow(x, -k);
  Real r(x.prec_);
  bool even = (k % 2) == 0;
  if (!even || mpfr_sgn(x.lo_) >= 0) {
    mpfr_pow_si(r.lo_, x.lo_, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, x.hi_, k, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_) <= 0) {
    mpfr_pow_si(r.lo_, x.hi_, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, x.lo_, k, MPFR_RNDU);
  } else {
    Real m = abs(x);
    mpfr_set_zero(r.lo_, 1);
    mpfr_pow_si(r.hi_, m.hi_, k, MPFR_RNDU);
  }
  return r;
}

Real pow(const Real& x, const Real& y) { return exp(y * log(x)); }

Real min(const Real& a, const Real& b) {
  Real r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Real max(const Real& a, const Real& b) {
  Real r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool Real::certainly_lt(const Real& b) const { return mpfr_less_p(hi_, b.lo_) != 0; }
bool Real::certainly_le(const Real& b) const { return mpfr_lessequal_p(hi_, b.lo_) != 0; }
bool Real::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Real::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Real::overlaps(const Real& b) const {
  return mpfr_lessequal_p(lo_, b.hi_) && mpfr_lessequal_p(b.lo_, hi_);
}

bool Real::contains(const mpq_class& v) const {
  return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Real::contains(const Real& b) const {
  return mpfr_lessequal_p(lo_, b.lo_) && mpfr_lessequal_p(b.hi_, hi_);
}

bool Real::is_finite() const {
  return mpfr_number_p(lo_) && mpfr_number_p(hi_) && mpfr_lessequal_p(lo_, hi_);
}

bool Real::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

double Real::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Real::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Real::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Real::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, prec_ + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Real::lo_string(int digits) const { return format_endpoint(lo_, digits, false); }
std::string Real::hi_string(int digits) const { return format_endpoint(hi_, digits, true); }

std::string Real::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Verdict compare_le(const Real& a, const Real& b) {
  if (a.certainly_le(b)) return Verdict::kTrue;
  if (b.certainly_lt(a)) return Verdict::kFalse;
  return Verdict::kUnknown;
}

}  // namespace ahs
