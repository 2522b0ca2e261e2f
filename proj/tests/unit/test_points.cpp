#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "ahs/errors.hpp"
#include "ahs/heights.hpp"
#include "ahs/points.hpp"

using namespace ahs;

namespace {
const Precision P = 128;
const EpsilonSplit kEps;

std::vector<std::string> texts(const PointSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s.points) out.push_back(p.to_string());
  return out;
}

// Independent counter: scans the box with plain integers, canonicalizes
// every hit and de-duplicates through a set.
std::size_t brute_count(long a, long b, long c, double B) {
  std::set<std::array<long, 3>> seen;
  long k = static_cast<long>(std::floor(B));
  for (long x = -k; x <= k; ++x) {
    for (long y = -k; y <= k; ++y) {
      for (long z = -k; z <= k; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (double(x * x + y * y + z * z) > B * B) continue;
        if (a * x * x + b * y * y + c * z * z != 0) continue;
        long g = std::gcd(std::gcd(std::labs(x), std::labs(y)), std::labs(z));
        std::array<long, 3> p{x / g, y / g, z / g};
        long s = p[0] != 0 ? p[0] : (p[1] != 0 ? p[1] : p[2]);
        if (s < 0) p = {-p[0], -p[1], -p[2]};
        seen.insert(p);
      }
    }
  }
  return seen.size();
}
}  // namespace

TEST(Enumerate, ConicAtThree) {
  PointSet s = enumerate_points(parse_poly("x0^2+x1^2-x2^2", 2), 3);
  EXPECT_EQ(texts(s), (std::vector<std::string>{"[1:0:1]", "[1:0:-1]", "[0:1:1]", "[0:1:-1]"}));
  EXPECT_EQ(s.candidates, 343u);
}

TEST(Enumerate, BelowMinimalHeight) {
  EXPECT_TRUE(enumerate_points(parse_poly("x0^2+x1^2-x2^2", 2), Rational(6, 5)).points.empty());
  EXPECT_EQ(count_points(parse_poly("x0^2+x1^2-x2^2", 2), Rational(3, 2)), 4u);
}

TEST(Enumerate, CoordinatePointsAtOne) {
  PointSet s = enumerate_points(parse_poly("x0*x1 - x2^2", 2), 1);
  EXPECT_EQ(texts(s), (std::vector<std::string>{"[1:0:0]", "[0:1:0]"}));
}

TEST(Enumerate, MatchesIndependentCounter) {
  for (double B : {3.0, 5.1, 7.5, 10.0}) {
    Rational Bq(static_cast<long>(B * 10), 10);
    Bq.canonicalize();
    EXPECT_EQ(count_points(parse_poly("x0^2+x1^2-x2^2", 2), Bq), brute_count(1, 1, -1, B)) << B;
    EXPECT_EQ(count_points(parse_poly("2*x0^2+3*x1^2-5*x2^2", 2), Bq), brute_count(2, 3, -5, B)) << B;
  }
}

TEST(Enumerate, CanonicalSortedOnCurveAndBounded) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  Rational B(51, 10);
  PointSet s = enumerate_points(f, B);
  std::set<std::string> unique;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const ProjPoint& p = s.points[i];
    EXPECT_EQ(evaluate(f, p), 0);
    EXPECT_EQ(ProjPoint(p.coords()), p);
    EXPECT_TRUE(height_report(p, P).multiplicative_H.certainly_le(Real(B, P)));
    unique.insert(p.to_string());
    if (i > 0) EXPECT_TRUE(s.points[i - 1] < p);
  }
  EXPECT_EQ(unique.size(), s.points.size());
}

TEST(Enumerate, BoxIsSufficient) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  PointSet small = enumerate_points(f, Rational(51, 10));
  PointSet big = enumerate_points(f, Rational(102, 10));
  std::size_t inside = 0;
  for (const auto& p : big.points) {
    Natural s = 0;
    for (const auto& x : p.coords()) s += x * x;
    if (Rational(s) <= Rational(51, 10) * Rational(51, 10)) ++inside;
  }
  EXPECT_EQ(inside, small.points.size());
}

TEST(Enumerate, Errors) {
  EXPECT_THROW(enumerate_points(HomogPoly(2, 2), 3), DomainError);
  EXPECT_THROW(enumerate_points(parse_poly("x0", 2), Rational(1, 2)), DomainError);
  try {
    enumerate_points(parse_poly("x0", 3), 50, 1000);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.cap_name(), "enumeration_cap");
  }
}

TEST(EvalMatrix, Shapes) {
  RationalMatrix m = monomial_eval_matrix({parse_point("[1:0:0]")}, 2, 3);
  ASSERT_EQ(m.cols(), 10u);
  EXPECT_EQ(m(0, 0), 1);
  for (std::size_t j = 1; j < 10; ++j) EXPECT_EQ(m(0, j), 0);
  PointSet s = enumerate_points(parse_poly("x0^2+x1^2-x2^2", 2), 3);
  RationalMatrix c = monomial_eval_matrix(s.points, 2, 1);
  EXPECT_EQ(c.rows(), 4u);
  EXPECT_EQ(c(1, 2), -1);
  EXPECT_EQ(monomial_eval_matrix({}, 2, 2).cols(), 6u);
  EXPECT_EQ(rank(c), 3u);
  EXPECT_TRUE(kernel_rational(c).empty());
}

TEST(Auxiliary, TwoPointsOnConic) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  std::vector<ProjPoint> pts{parse_point("[1:0:1]"), parse_point("[1:0:-1]")};
  CoverCertificate c = find_auxiliary(f, pts, 2);
  ASSERT_TRUE(c.found);
  EXPECT_EQ(c.degree, 1u);
  EXPECT_EQ(c.auxiliary->to_string(), "x1");
  EXPECT_TRUE(c.vanishing_checked);
  EXPECT_TRUE(c.independence_checked);
  EXPECT_TRUE(recheck_certificate(f, pts, c));
}

TEST(Auxiliary, EmptyPointSet) {
  CoverCertificate c = find_auxiliary(parse_poly("x0^2+x1^2-x2^2", 2), {}, 2);
  ASSERT_TRUE(c.found);
  EXPECT_EQ(c.auxiliary->to_string(), "x0");
}

TEST(Auxiliary, NegativeResult) {
  // The only degree-1 form vanishing at [0:1] is x0 = f itself.
  HomogPoly f = parse_poly("x0", 1);
  CoverCertificate c = find_auxiliary(f, {parse_point("[0:1]")}, 1);
  EXPECT_FALSE(c.found);
  EXPECT_FALSE(c.note.empty());
}

TEST(Auxiliary, ConicFourPointsNeedsDegreeTwo) {
  HomogPoly f = parse_poly("x0^2+x1^2-x2^2", 2);
  PointSet s = enumerate_points(f, 3);
  CoverCertificate c = find_auxiliary(f, s.points, 2);
  ASSERT_TRUE(c.found);
  EXPECT_EQ(c.degree, 2u);
  EXPECT_TRUE(recheck_certificate(f, s.points, c));
  EXPECT_NE(normalize_primitive(*c.auxiliary), normalize_primitive(f));
}

TEST(Covering, BigCoefficientCubic) {
  HomogPoly f = parse_poly("x0^3+x1^3+1000000000000000000000000000000*x2^3", 2);
  CoveringReport r = verify_covering(f, 2, default_scan_max(3), kEps, P);
  EXPECT_TRUE(r.threshold.threshold.certainly_lt(Real(100000, P)));
  EXPECT_TRUE(Real(2, P).certainly_lt(r.threshold.threshold));
  ASSERT_TRUE(r.below_threshold);
  ASSERT_TRUE(r.points.has_value());
  EXPECT_EQ(r.points->points.size(), 1u);
  EXPECT_EQ(r.points->points[0].to_string(), "[1:-1:0]");
  ASSERT_TRUE(r.certificate && r.certificate->found);
  EXPECT_EQ(r.status, "covered");
  EXPECT_EQ(r.certificate->auxiliary->to_string(), "x0 + x1");
}

TEST(Covering, ThresholdGrowsWithHeight) {
  Real a = covering_threshold(parse_poly("x0^3+x1^3+2*x2^3", 2), 130, kEps, P).log_threshold;
  Real b = covering_threshold(parse_poly("x0^3+x1^3+2000*x2^3", 2), 130, kEps, P).log_threshold;
  EXPECT_TRUE(a.certainly_lt(b));
  EXPECT_NEAR((b - a).mid_double(), std::log(1000.0) / 6, 1e-12);
}

TEST(Covering, AboveThresholdIsReported) {
  CoveringReport r = verify_covering(parse_poly("x0^2+x1^2-x2^2", 2), 50, 120, kEps, P);
  EXPECT_FALSE(r.below_threshold);
  EXPECT_EQ(r.status, "threshold not met");
  EXPECT_FALSE(r.points.has_value());
}

TEST(Covering, NeedsTwoOrMoreVariables) {
  EXPECT_THROW(covering_threshold(parse_poly("x0^2+x1^2", 1), 120, kEps, P), DomainError);
}

TEST(PerDegree, LinearFormIsFinite) {
  Real t = per_degree_threshold(parse_poly("x0", 1), 1, P);
  EXPECT_TRUE(t.is_finite());
  EXPECT_NEAR(t.mid_double(), -0.5 * std::log(2.0), 1e-15);
  EXPECT_THROW(per_degree_threshold(parse_poly("x0^2", 1), 1, P), DomainError);
}
