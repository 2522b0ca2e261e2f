#pragma once

#include <cstdint>

#include "ahs/asymptotics.hpp"
#include "ahs/linalg.hpp"
#include "ahs/poly.hpp"

namespace ahs {

// sum_I p_I q_I I!/D! for forms of the same degree D.
Rational bombieri_inner(const HomogPoly& p, const HomogPoly& q);

// C(n,D) / (2 r(n,D)).
Real slope_ED_sym(unsigned n, unsigned long D, Precision prec);
// -(1/2r) sum_I ln(D!/I!), read off the diagonal Gram matrix of the monomial
// basis. Agrees with slope_ED_sym through an independent code path.
Real slope_ED_sym_direct(unsigned n, unsigned long D, Precision prec);

// Gram matrix of {f e_i} over the degree-(D - delta) monomials e_i in
// lexicographic order, under bombieri_inner in degree D.
RationalMatrix gram_matrix_shifted(const HomogPoly& f, unsigned long D);
// det of gram_matrix_shifted; f must be primitive and delta <= D.
Rational gram_det_shifted(const HomogPoly& f, unsigned long D);

enum class SlopeFrame { kSym, kJohnInterval };

struct SlopeResult {
  Real slope;
  SlopeFrame frame = SlopeFrame::kSym;
  unsigned long D = 0;
  // True when D < delta, where F_D = E_D and the slope is slope_ED_sym.
  bool equals_ED = false;
};

// [C(n,D)/2 + ln gram_det_shifted(f,D)/2] / r1(n,D), or slope_ED_sym(n,D)
// when D < delta. f must be primitive.
SlopeResult slope_FD_exact_sym(const HomogPoly& f, unsigned long D, Precision prec);
// The John-frame slope as the interval sym - [0, ln r(n,D)/2].
SlopeResult slope_FD_john(const HomogPoly& f, unsigned long D, Precision prec);

// (1/2 r1) (C(n,D) - C(n,D-delta) - 2 r(n,D-delta) muIX - r(n,D-delta) ln G(delta,n))
// and the same without the G term, for D >= delta >= 1.
BoundPair theorem_bounds_sym(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                             Precision prec);
// theorem_bounds_sym widened by the R0 interval [-ln r(n,D)/2, 0].
BoundPair theorem_bounds_john(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                              Precision prec);

// Slope of F_D with the degree taken as minus the log covolume of the
// Bombieri lattices: [-C(n,D)/2 + ln gram_det_shifted(f,D)/2] / r1(n,D).
SlopeResult slope_FD_covolume(const HomogPoly& f, unsigned long D, Precision prec);
// The theorem sandwich rewritten for slope_FD_covolume: C enters with the
// opposite sign, (1/2 r1)(-C(n,D) + C(n,D-delta) - 2 r' muIX - r' ln G) and
// the same without the G term.
BoundPair theorem_bounds_covolume(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                                  Precision prec);

// Which slope/bound pair a sandwich check uses.
enum class SandwichVariant { kSym, kCovolume };

// lower <= slope <= upper for a primitive f and D >= delta, decided exactly.
// Both sides reduce to comparing the rational
//   X = |f|^(2 r') / (det Gram * prod_J (J!/(D-delta)!)^s)
// with 1 and with G(delta,n)^r', where r' = r(n, D-delta) and s = +1 for
// the sym variant, -1 for the covolume one. The upper side is an exact
// rational comparison; the lower one is too when G is rational.
struct SandwichCheck {
  SlopeResult slope;
  BoundPair bounds;
  Rational X;
  Verdict upper = Verdict::kUnknown;
  Verdict lower = Verdict::kUnknown;
  bool holds() const { return upper == Verdict::kTrue && lower == Verdict::kTrue; }
};

SandwichCheck check_theorem_sandwich(const HomogPoly& f, unsigned long D, Precision prec,
                                     SandwichVariant variant = SandwichVariant::kSym);

// -(D/2) ln(n+1).
Real naive_lower(unsigned n, unsigned long D, Precision prec);

inline constexpr std::uint64_t kDefaultPairCap = 50'000'000;

// Extremes of prod_k binom(i_k + j_k, i_k) / binom(D + D', D) over all pairs
// of compositions i of D and j of D', checked against [1/G(D',n), 1].
struct JiaJiaoReport {
  unsigned n = 0;
  unsigned long D = 0;
  unsigned long Dp = 0;
  std::uint64_t pairs = 0;
  Rational min_ratio;
  Rational max_ratio;
  MultiIndex argmin_i;
  MultiIndex argmin_j;
  Real G;
  Verdict upper = Verdict::kUnknown;  // max_ratio <= 1
  Verdict lower = Verdict::kUnknown;  // min_ratio >= 1/G
  std::uint64_t lower_violations = 0;
  bool holds() const { return upper == Verdict::kTrue && lower == Verdict::kTrue; }
};

// Throws ResourceError when r(n,D) r(n,D') exceeds cap.
JiaJiaoReport check_jiajiao(unsigned n, unsigned long D, unsigned long Dp, Precision prec,
                            std::uint64_t cap = kDefaultPairCap);

// D (-muIX/(n delta) + B0(n,delta)): the lower bound on the John-frame slope
// of F_D implied by the uniform constant. Needs n >= 2 and D >= delta.
Real theorem_b0_lower(unsigned n, unsigned long delta, const Real& muIX, unsigned long D,
                      unsigned long scan_max, const EpsilonSplit& eps, Precision prec);

}  // namespace ahs
