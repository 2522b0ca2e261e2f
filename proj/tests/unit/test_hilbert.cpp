#include <gtest/gtest.h>

#include <cmath>

#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"
#include "ahs/heights.hpp"
#include "ahs/hilbert.hpp"

using namespace ahs;

namespace {
const Precision P = 128;
const double kLn2 = std::log(2.0);

struct Fixture {
  const char* text;
  unsigned n;
};

const Fixture kFixtures[] = {
    {"x0", 1}, {"x0+x1", 1}, {"x0^2+x1^2", 1}, {"x0^2+x1^2-x2^2", 2}, {"x0^3+x1^3+2*x2^3", 2},
};
}  // namespace

TEST(BombieriInner, Examples) {
  EXPECT_EQ(bombieri_inner(parse_poly("x0^3", 1), parse_poly("x0^3", 1)), 1);
  EXPECT_EQ(bombieri_inner(parse_poly("x0*x1", 1), parse_poly("x0*x1", 1)), Rational(1, 2));
  EXPECT_EQ(bombieri_inner(parse_poly("x0^2", 1), parse_poly("x0*x1", 1)), 0);
  EXPECT_THROW(bombieri_inner(parse_poly("x0^2", 1), parse_poly("x0", 1)), DomainError);
  HomogPoly f = parse_poly("x0^2 - 3*x0*x1 + x2^2", 2);
  EXPECT_EQ(bombieri_inner(f, f), bombieri_norm_sq(f));
}

TEST(SlopeED, Examples) {
  EXPECT_TRUE(slope_ED_sym(3, 0, P).contains(mpq_class(0)));
  EXPECT_NEAR(slope_ED_sym(1, 2, P).mid_double(), -kLn2 / 6, 1e-15);
}

TEST(SlopeED, TwoPathsAgree) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned long D = 0; D <= 10; ++D) {
      EXPECT_TRUE(slope_ED_sym(n, D, P).overlaps(slope_ED_sym_direct(n, D, P))) << n << " " << D;
    }
  }
}

TEST(GramDet, Examples) {
  EXPECT_EQ(gram_det_shifted(parse_poly("x0", 1), 1), 1);
  EXPECT_EQ(gram_det_shifted(parse_poly("x0", 1), 2), Rational(1, 2));
  EXPECT_THROW(gram_det_shifted(parse_poly("2*x0", 1), 2), DomainError);
  for (const auto& fx : kFixtures) {
    HomogPoly f = normalize_primitive(parse_poly(fx.text, fx.n));
    for (unsigned long D = f.degree(); D <= f.degree() + 3; ++D) EXPECT_GT(gram_det_shifted(f, D), 0);
  }
}

TEST(GramDet, SignAndScaling) {
  HomogPoly f = normalize_primitive(parse_poly("x0^2 - 2*x0*x1 + 3*x2^2", 2));
  RationalMatrix g = gram_matrix_shifted(f, 4);
  RationalMatrix gneg = gram_matrix_shifted(poly_scale(f, -1), 4);
  EXPECT_EQ(determinant(g), determinant(gneg));
  const std::size_t N = g.rows();
  Rational scaled = determinant(gram_matrix_shifted(poly_scale(f, 3), 4));
  Rational factor = 1;
  for (std::size_t i = 0; i < 2 * N; ++i) factor *= 3;
  EXPECT_EQ(scaled, determinant(g) * factor);
  EXPECT_EQ(gram_det_shifted(normalize_primitive(poly_scale(f, 3)), 4), gram_det_shifted(f, 4));
}

TEST(Rank, QuotientCount) {
  for (const auto& fx : kFixtures) {
    HomogPoly f = normalize_primitive(parse_poly(fx.text, fx.n));
    for (unsigned long D = f.degree(); D <= f.degree() + 4; ++D) {
      RationalMatrix g = gram_matrix_shifted(f, D);
      EXPECT_EQ(rank_r(f.n(), static_cast<long>(D)) - Natural(static_cast<unsigned long>(g.rows())),
                rank_r1(f.n(), static_cast<long>(D), f.degree()));
      EXPECT_EQ(rank(g), g.rows());
    }
  }
}

TEST(SlopeFD, Examples) {
  HomogPoly x0 = parse_poly("x0", 1);
  EXPECT_TRUE(slope_FD_exact_sym(x0, 1, P).slope.contains(mpq_class(0)));
  EXPECT_NEAR(slope_FD_exact_sym(x0, 2, P).slope.mid_double(), -kLn2, 1e-15);
  HomogPoly q = parse_poly("x0^3+x1^3", 1);
  SlopeResult s = slope_FD_exact_sym(q, 2, P);
  EXPECT_TRUE(s.equals_ED);
  EXPECT_TRUE(s.slope.overlaps(slope_ED_sym(1, 2, P)));
}

TEST(SlopeFD, JohnFrame) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  SlopeResult sym = slope_FD_exact_sym(f, 4, P);
  SlopeResult john = slope_FD_john(f, 4, P);
  EXPECT_EQ(john.frame, SlopeFrame::kJohnInterval);
  EXPECT_TRUE(john.slope.contains(sym.slope));
  EXPECT_NEAR(sym.slope.mid_double() - john.slope.lo_double(), 0.5 * std::log(15.0), 1e-12);
}

TEST(TheoremBounds, Examples) {
  Real mu0 = slope_IX(parse_poly("x0", 1), P);
  BoundPair b1 = theorem_bounds_sym(1, 1, mu0, 1, P);
  EXPECT_NEAR(b1.lower.mid_double(), -0.5 * kLn2, 1e-15);
  EXPECT_TRUE(b1.upper.contains(mpq_class(0)));
  EXPECT_TRUE(b1.certifies(Real(0, P)));
  BoundPair b2 = theorem_bounds_sym(1, 1, mu0, 2, P);
  EXPECT_TRUE(b2.certifies(-log(Real(2, P))));
  EXPECT_THROW(theorem_bounds_sym(1, 2, mu0, 1, P), DomainError);
}

TEST(TheoremBounds, WidthFormula) {
  Real mu = slope_IX(parse_poly("x0^2+x1^2-x2^2", 2), P);
  for (unsigned long D = 2; D <= 6; ++D) {
    BoundPair b = theorem_bounds_sym(2, 2, mu, D, P);
    double r = rank_r(2, static_cast<long>(D - 2)).get_d();
    double r1 = rank_r1(2, static_cast<long>(D), 2).get_d();
    double expect = r * std::log(9.0) / (2 * r1);
    EXPECT_NEAR(b.upper.mid_double() - b.lower.mid_double(), expect, 1e-12);
  }
}

TEST(TheoremBounds, JohnWidening) {
  Real mu = slope_IX(parse_poly("x0", 1), P);
  BoundPair sym = theorem_bounds_sym(1, 1, mu, 1, P);
  BoundPair john = theorem_bounds_john(1, 1, mu, 1, P);
  EXPECT_TRUE(john.upper.overlaps(sym.upper));
  EXPECT_NEAR(john.lower.mid_double(), -kLn2, 1e-15);
}

TEST(Sandwich, EqualityAtDeltaIsCertified) {
  for (const auto& fx : kFixtures) {
    HomogPoly f = normalize_primitive(parse_poly(fx.text, fx.n));
    SandwichCheck c = check_theorem_sandwich(f, f.degree(), P);
    EXPECT_EQ(c.X, 1) << fx.text;
    EXPECT_EQ(c.upper, Verdict::kTrue) << fx.text;
    EXPECT_EQ(c.lower, Verdict::kTrue) << fx.text;
  }
}

TEST(Sandwich, ExactDecisionAgreesWithIntervals) {
  for (const auto& fx : kFixtures) {
    HomogPoly f = normalize_primitive(parse_poly(fx.text, fx.n));
    for (unsigned long D = f.degree() + 1; D <= f.degree() + 4; ++D) {
      for (SandwichVariant v : {SandwichVariant::kSym, SandwichVariant::kCovolume}) {
        SandwichCheck c = check_theorem_sandwich(f, D, P, v);
        if (c.holds()) {
          EXPECT_FALSE(c.bounds.refutes(c.slope.slope));
        } else {
          EXPECT_FALSE(c.bounds.certifies(c.slope.slope));
        }
      }
    }
  }
}

TEST(Sandwich, CovolumeVariantHoldsOnFixtures) {
  for (const auto& fx : kFixtures) {
    HomogPoly f = normalize_primitive(parse_poly(fx.text, fx.n));
    for (unsigned long D = f.degree(); D <= f.degree() + 4; ++D) {
      EXPECT_TRUE(check_theorem_sandwich(f, D, P, SandwichVariant::kCovolume).holds()) << fx.text << " " << D;
    }
  }
}

TEST(Sandwich, CovolumeSlopeOfLinearForm) {
  // F_D for f = x0 is spanned by x1^D, whose Bombieri norm is 1.
  HomogPoly x0 = parse_poly("x0", 1);
  for (unsigned long D = 1; D <= 6; ++D) {
    EXPECT_TRUE(slope_FD_covolume(x0, D, P).slope.contains(mpq_class(0))) << D;
  }
}

TEST(NaiveLower, Examples) {
  EXPECT_NEAR(naive_lower(1, 2, P).mid_double(), -kLn2, 1e-15);
  EXPECT_NEAR(naive_lower(3, 1, P).mid_double(), -0.5 * std::log(4.0), 1e-15);
  for (unsigned long D = 1; D < 10; ++D) EXPECT_TRUE(naive_lower(2, D, P).certainly_negative());
}

TEST(JiaJiao, EqualityCase) {
  JiaJiaoReport r = check_jiajiao(1, 1, 1, P);
  EXPECT_EQ(r.min_ratio, Rational(1, 2));
  EXPECT_EQ(r.max_ratio, 1);
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.pairs, 4u);
}

TEST(JiaJiao, UpperBoundExhaustive) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned long D = 0; D <= 8; ++D) {
      for (unsigned long Dp = 0; Dp <= 8; ++Dp) {
        JiaJiaoReport r = check_jiajiao(n, D, Dp, P);
        EXPECT_EQ(r.upper, Verdict::kTrue);
        EXPECT_EQ(r.max_ratio, 1);
      }
    }
  }
}

TEST(JiaJiao, LowerBoundFailsForUnbalancedDegrees) {
  // i = (8,0), j = (0,1): binom(9,8)^-1 = 1/9 < 1/G(1,1) = 1/2.
  JiaJiaoReport r = check_jiajiao(1, 8, 1, P);
  EXPECT_EQ(r.lower, Verdict::kFalse);
  EXPECT_EQ(r.min_ratio, Rational(1, 9));
  EXPECT_GT(r.lower_violations, 0u);
}

TEST(JiaJiao, CapIsEnforced) { EXPECT_THROW(check_jiajiao(3, 8, 8, P, 10), ResourceError); }

TEST(B0Lower, AffineInSlope) {
  EpsilonSplit eps;
  Real a = theorem_b0_lower(2, 2, Real(0, P), 4, 120, eps, P);
  Real b = theorem_b0_lower(2, 2, Real(-1, P), 4, 120, eps, P);
  Real c = theorem_b0_lower(2, 2, Real(-2, P), 4, 120, eps, P);
  EXPECT_NEAR((b - a).mid_double(), (c - b).mid_double(), 1e-12);
  EXPECT_GT((b - a).mid_double(), 0);
  EXPECT_THROW(theorem_b0_lower(1, 2, Real(0, P), 4, 120, eps, P), DomainError);
}

TEST(B0Lower, BelowJohnSlopeOfConic) {
  EpsilonSplit eps;
  HomogPoly f = parse_poly("x0^2+x1^2+x2^2", 2);
  Real mu = slope_IX(f, P);
  for (unsigned long D = 2; D <= 8; ++D) {
    Real bound = theorem_b0_lower(2, 2, mu, D, 120, eps, P);
    SlopeResult john = slope_FD_john(f, D, P);
    EXPECT_TRUE(bound.certainly_le(Real::hull(john.slope, john.slope))) << D;
  }
}
