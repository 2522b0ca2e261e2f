#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ahs/enclosure.hpp"
#include "ahs/exact.hpp"

namespace ahs {

// Certified pair lower <= subject <= upper.
struct BoundPair {
  Real lower;
  Real upper;
  std::string subject;

  // True when lower <= v <= upper holds for every point of v.
  bool certifies(const Real& v) const { return lower.certainly_le(v) && v.certainly_le(upper); }
  // True when the sandwich is certainly violated.
  bool refutes(const Real& v) const { return v.certainly_lt(lower) || upper.certainly_lt(v); }
};

// Coefficients of D^{n+1}, D^n log D and D^n in the expansion of C(n,D).
struct CoeffTriple {
  Rational a;
  Rational b;
  Real c;
};

// The split parameter of the small/large range of summation, 0 < eps < 1/6.
class EpsilonSplit {
 public:
  EpsilonSplit();  // 1/12
  explicit EpsilonSplit(const Rational& value);
  const Rational& value() const { return value_; }
  bool operator<(const EpsilonSplit& o) const { return value_ < o.value_; }

 private:
  Rational value_;
};

enum class EmKind { kLogX, kXLogX };

// Where the D^n coefficient c_n (and for kDerived also b_n) comes from.
//   kClosedForm  the closed polynomial-in-n expression
//   kRecursion   the recursion seeded with c_1 = -1 + log(2 pi)/2
//   kDerived     coefficients re-derived from C(n,D) = sum C(n-1,m) - Q(n,D)
enum class CoeffSource { kClosedForm, kRecursion, kDerived };

const char* to_string(CoeffSource s);

// Sign choices for the n = 1 remainders that seed A4 and A4'.
struct A4Convention {
  bool lower_plus = true;    // A4(1,D) = +A3(D) if true, else -A3(D)
  bool upper_prime = true;   // A4'(1,D) = +A3'(D) if true, else -A3(D)

  std::string name() const;
  bool operator==(const A4Convention& o) const = default;
  bool operator<(const A4Convention& o) const {
    return std::pair(lower_plus, upper_prime) < std::pair(o.lower_plus, o.upper_prime);
  }
  static std::array<A4Convention, 4> candidates();
  // Both remainders equal to -A3(D).
  static A4Convention all_minus() { return {false, false}; }
};

struct StirlingConstants {
  Real limit;  // -1 + log(2 pi)/2
  Real gap;    // (3/2) log(3/2) + 1/2 - log(2 pi)/2
};

StirlingConstants stirling_log_gap(Precision prec);

// G(D', n): (n+1)^n if D' <= n, else e^{2n+3} D'^{n/2} / ((2 pi)^{(n+3)/2} (n+1)^{(n+1)/2}).
Real g_const(unsigned long Dp, unsigned n, Precision prec);

// The bracket 0 <= R0(n,D) <= log sqrt(r(n,D)).
BoundPair r0_bounds(unsigned n, unsigned long D, Precision prec);

// Two-sided bound on sum_{m=p}^{q} f(m) for f = log x or x log x.
BoundPair em_bounds(EmKind kind, unsigned long p, unsigned long q, Precision prec);

BoundPair a1_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec);
BoundPair s_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec);
BoundPair a2_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec);
BoundPair q_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec);

// a3(D) evaluated from its definition (integrals minus main terms).
Real a3_definition(unsigned long D, Precision prec);
// a3(D) after the D^2 and D log D terms cancel symbolically.
Real a3_reduced(unsigned long D, Precision prec);
BoundPair a3_bounds(unsigned long D, Precision prec);
BoundPair c1_bounds(unsigned long D, Precision prec);

// Recursive remainders A4(n,D) (lower) and A4'(n,D) (upper) for a seed
// convention. A4(n,0) = A4'(n,0) = 0 since C(n,0) = 0.
BoundPair a4_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec,
                    const A4Convention& conv);

// a_n = (1 - H_{n+1})/n!, b_n = -(n-2)/(2 n!) and the re-derived
// b_n = 1/(2 (n-1)!).
Rational coeff_a(unsigned n);
Rational coeff_b_closed(unsigned n);
Rational coeff_b_derived(unsigned n);
// One step of a_n = a_{n-1}/(n+1) - H_n/(n+1)! and b_n = b_{n-1}/n - 1/(2 n!).
Rational coeff_a_step(const Rational& a_prev, unsigned n);
Rational coeff_b_step(const Rational& b_prev, unsigned n);

// Majorants of |A3(D)| (or |A3'(D)| when prime) and of |A4(n,D)|, |A4'(n,D)|
// of the form sum c (D+a)^p ln(D+b)^q, as used for the tail of B0.
Real a3_abs_majorant(unsigned long D, bool prime, Precision prec);
Real a4_abs_majorant(unsigned n, unsigned long D, bool lower, const EpsilonSplit& eps, Precision prec,
                     const A4Convention& conv);

CoeffTriple c_main_coeffs(unsigned n, CoeffSource source, Precision prec);

// Main terms a D^{n+1} + b D^n log D + c D^n plus A4/A4' for explicit choices.
BoundPair c_bounds_with(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec,
                        CoeffSource source, const A4Convention& conv);

// Outcome of validating one (source, convention) candidate on the grid.
struct CandidateOutcome {
  CoeffSource source;
  A4Convention convention;
  unsigned checked = 0;
  unsigned failures = 0;
  std::string first_failure;  // "n=.., D=.., side" or empty
};

// Which coefficient source and seed convention the C(n,D) sandwich uses.
struct SandwichResolution {
  CoeffSource source = CoeffSource::kDerived;
  A4Convention convention;
  bool validated = false;
  std::vector<CandidateOutcome> candidates;
  std::string summary() const;
};

// Validates every (source, convention) candidate against exact C(n,D) on
// n = 1, D in [4,200] and n in {2,3}, D in [4,60]. Closed-form and recursion sources are
// preferred; among passing conventions (+A3,+A3') wins ties because it is
// the one matching the C(1,D) sandwich. Cached per (eps, precision).
const SandwichResolution& resolve_c_sandwich(const EpsilonSplit& eps, Precision prec);

// c_bounds with the resolved source and convention.
BoundPair c_bounds(unsigned n, unsigned long D, const EpsilonSplit& eps, Precision prec);

struct EmpiricalEstimate {
  std::array<unsigned long, 3> D;
  std::array<Real, 3> samples;
  double spread = 0;
  Real value;  // last sample widened by the spread
};

// (C(n,D) - a_n D^{n+1} - b_n D^n log D) / D^n at D_max/2, 3 D_max/4, D_max.
// b_n comes from b_source (closed form unless kDerived).
EmpiricalEstimate c_coeff_samples(unsigned n, unsigned long D_max, Precision prec,
                                  CoeffSource b_source = CoeffSource::kClosedForm);

inline constexpr double kEmpiricalTolerance = 0.1;

// The estimate, or CertificationError carrying the samples when the spread
// exceeds tolerance.
Real c_coeff_empirical(unsigned n, unsigned long D_max, Precision prec,
                       CoeffSource b_source = CoeffSource::kClosedForm,
                       double tolerance = kEmpiricalTolerance);

struct B0Result {
  Real value;             // B0(n, delta)
  Real closed_part;    // everything but the inf term
  Real scan_min;          // min over D in [delta, scan_max] of the inf argument
  unsigned long argmin_D = 0;
  Real tail_bound;        // majorant of |inf argument| for D >= scan_max
  Real inf_lower;         // min(scan_min, -tail_bound)
  unsigned long scan_max = 0;
  bool tail_decreasing = false;
  A4Convention convention;
};

unsigned long default_scan_max(unsigned long delta);

// B0(n, delta) with the inf over D >= delta replaced by a certified lower
// bound. Throws CertificationError if the tail majorant is not provably
// decreasing from scan_max on.
B0Result b0_const(unsigned n, unsigned long delta, unsigned long scan_max, const EpsilonSplit& eps,
                  Precision prec);
B0Result b0_const(unsigned n, unsigned long delta, unsigned long scan_max, const EpsilonSplit& eps,
                  Precision prec, const A4Convention& conv);

}  // namespace ahs
