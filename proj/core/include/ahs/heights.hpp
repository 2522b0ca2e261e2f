#pragma once

#include "ahs/enclosure.hpp"
#include "ahs/poly.hpp"

namespace ahs {

// ln max |a_I| over the coefficients of the primitive representative of f.
Real classical_height(const HomogPoly& f, Precision prec);

// sum_I a_I^2 I!/delta!, exact.
Rational bombieri_norm_sq(const HomogPoly& f);
// sqrt of bombieri_norm_sq(f).
Real bombieri_norm(const HomogPoly& f, Precision prec);

// -ln of the Bombieri norm of the primitive representative of f.
Real slope_IX(const HomogPoly& f, Precision prec);

// h(X) - (n/2) ln(delta+1) <= -mu(I_X) <= h(X) + (3n/2) ln(delta+1).
struct HeightSlopeReport {
  Real height;
  Real neg_slope;
  Real lower;
  Real upper;
  Verdict verdict = Verdict::kUnknown;
  Precision precision = 0;
};

// Certifies the height/slope sandwich, doubling precision as needed.
// Throws CertificationError if it stays undecided at the precision cap.
HeightSlopeReport compare_height_slope(const HomogPoly& f, Precision prec);

// ln max |x_i| on canonical coordinates.
Real weil_height(const ProjPoint& p, Precision prec);
// (1/2) ln sum x_i^2 on canonical coordinates.
Real arakelov_height(const ProjPoint& p, Precision prec);

struct HeightReport {
  Real weil;
  Real arakelov;
  Real multiplicative_H;  // exp(arakelov) = sqrt(sum x_i^2)
  Verdict sandwich = Verdict::kUnknown;  // weil <= arakelov <= weil + ln(n+1)/2
};

HeightReport height_report(const ProjPoint& p, Precision prec);

// ln|fg| <= ln|f| + ln|g| and ln|fg| >= ln|f| + ln|g| - ln G(deg g, n)/2
// for Bombieri norms.
struct ProductLemmaReport {
  Real log_fg;
  Real log_f;
  Real log_g;
  Real log_G;
  Verdict upper = Verdict::kUnknown;
  Verdict lower = Verdict::kUnknown;
  bool holds() const { return upper == Verdict::kTrue && lower == Verdict::kTrue; }
};

ProductLemmaReport check_product_lemma(const HomogPoly& f, const HomogPoly& g, Precision prec);

}  // namespace ahs
