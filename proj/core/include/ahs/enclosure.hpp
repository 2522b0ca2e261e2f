#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace ahs {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kMaxPrecision = 4096;

// A closed interval [lo, hi] with MPFR endpoints. Every operation rounds lo
// toward -inf and hi toward +inf, so the true value of any expression built
// from exact inputs stays inside the result.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(long v, Precision prec);
  Real(const mpz_class& v, Precision prec);
  Real(const mpq_class& v, Precision prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Interval spanning two enclosures (convex hull).
  static Real hull(const Real& a, const Real& b);
  // Interval from decimal endpoint strings, rounded outward.
  static Real from_strings(const std::string& lo, const std::string& hi, Precision prec);
  // Parses a decimal or p/q literal into the tightest enclosure.
  static Real parse(const std::string& text, Precision prec);

  static Real pi(Precision prec);
  static Real log2pi(Precision prec);
  static Real e(Precision prec);

  Precision precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend Real log(const Real& x);
  friend Real exp(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow(const Real& x, long k);
  // x^y for x > 0, computed as exp(y log x).
  friend Real pow(const Real& x, const Real& y);
  friend Real min(const Real& a, const Real& b);
  friend Real max(const Real& a, const Real& b);

  // Certified comparisons: true only when every point of a is below b.
  bool certainly_lt(const Real& b) const;
  bool certainly_le(const Real& b) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  // True when the intervals share at least one point.
  bool overlaps(const Real& b) const;
  bool contains(const mpq_class& v) const;
  bool contains(const Real& b) const;

  bool is_finite() const;
  bool is_point() const;
  // Upper bound on hi - lo as a double.
  double width() const;
  double lo_double() const;
  double hi_double() const;
  double mid_double() const;

  // Endpoint strings in scientific notation, rounded outward.
  std::string lo_string(int digits = 25) const;
  std::string hi_string(int digits = 25) const;
  std::string to_string(int digits = 25) const;

 private:
  void init(Precision prec);
  void promote(Precision prec);

  Precision prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Clamps a requested precision into the supported range.
Precision clamp_precision(long bits);

// Three-valued verdict of a certified comparison.
enum class Verdict { kTrue, kFalse, kUnknown };

// Decides a <= b: kTrue if certainly, kFalse if certainly not, kUnknown otherwise.
Verdict compare_le(const Real& a, const Real& b);

// Reruns check(prec) with doubled precision until it returns a definite
// verdict or the precision cap is reached.
template <class F>
Verdict refine(F&& check, Precision start = kDefaultPrecision) {
  for (Precision p = start;; p *= 2) {
    if (p > kMaxPrecision) p = kMaxPrecision;
    Verdict v = check(p);
    if (v != Verdict::kUnknown || p >= kMaxPrecision) return v;
  }
}

}  // namespace ahs
