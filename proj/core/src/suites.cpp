#include "ahs/suites.hpp"

#include <random>

#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"
#include "ahs/heights.hpp"
#include "ahs/hilbert.hpp"
#include "ahs/points.hpp"

namespace ahs {

namespace {

std::string nd(unsigned n, unsigned long D) { return "n=" + std::to_string(n) + " D=" + std::to_string(D); }

Verdict sandwich_verdict(const BoundPair& b, const Real& v) {
  if (b.certifies(v)) return Verdict::kTrue;
  return b.refutes(v) ? Verdict::kFalse : Verdict::kUnknown;
}

std::string interval(const Real& v) { return "[" + v.lo_string(12) + ", " + v.hi_string(12) + "]"; }

HomogPoly random_form(std::mt19937_64& rng, unsigned n, unsigned long d, long range) {
  HomogPoly f(n, d);
  while (f.is_zero()) {
    for (const auto& I : compositions(n, d)) {
      if (rng() % 3 != 0) f.add_term(I, Rational(static_cast<long>(rng() % (2 * range + 1)) - range));
    }
  }
  return f;
}

void appendix(std::vector<CheckRow>& out, const SuiteGrid& g, const EpsilonSplit& eps, Precision prec) {
  auto add = [&](const char* check, const std::string& params, const BoundPair& b, const Real& v) {
    out.push_back({"appendix", check, params, sandwich_verdict(b, v),
                   "exact " + interval(v) + " bounds " + interval(Real::hull(b.lower, b.upper))});
  };
  for (unsigned n = 2; n <= g.n_max; ++n) {
    for (unsigned long D = 4; D <= g.d_max; ++D) {
      add("s_bounds", nd(n, D), s_bounds(n, D, eps, prec), s_exact(n, D, prec));
      add("q_bounds", nd(n, D), q_bounds(n, D, eps, prec), q_exact(n, D, prec));
      add("c_bounds", nd(n, D), c_bounds(n, D, eps, prec), c_recurrence(n, D, prec));
    }
  }
  for (unsigned long D = 4; D <= g.d_max_c1; ++D) {
    add("c1_bounds", nd(1, D), c1_bounds(D, prec), c_recurrence(1, D, prec));
  }
  for (unsigned n = 2; n <= 8; ++n) {
    bool a = coeff_a_step(coeff_a(n - 1), n) == coeff_a(n);
    bool b = coeff_b_step(coeff_b_closed(n - 1), n) == coeff_b_closed(n);
    out.push_back({"appendix", "coeff_recursions", "n=" + std::to_string(n),
                   a && b ? Verdict::kTrue : Verdict::kFalse, ""});
  }
}

void lemmas(std::vector<CheckRow>& out, const SuiteGrid& g, Precision prec) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned long D = 0; D <= g.lemma_d_max; ++D) {
      for (unsigned long Dp = 0; Dp <= g.lemma_d_max; ++Dp) {
        JiaJiaoReport r = check_jiajiao(n, D, Dp, prec);
        std::string params = nd(n, D) + " D'=" + std::to_string(Dp);
        out.push_back({"lemmas", "jiajiao_upper", params, r.upper, "max ratio " + r.max_ratio.get_str()});
        out.push_back({"lemmas", "jiajiao_lower", params, r.lower,
                       "min ratio " + r.min_ratio.get_str() + " vs 1/G with G " + interval(r.G)});
      }
    }
  }
  std::mt19937_64 rng(g.seed);
  for (unsigned i = 0; i < g.random_count; ++i) {
    unsigned n = 1 + rng() % 3;
    HomogPoly f = random_form(rng, n, 1 + rng() % 4, 9);
    HomogPoly h = random_form(rng, n, 1 + rng() % 4, 9);
    ProductLemmaReport r = check_product_lemma(f, h, prec);
    std::string params = "f=" + f.to_string() + " g=" + h.to_string();
    out.push_back({"lemmas", "product_upper", params, r.upper, ""});
    out.push_back({"lemmas", "product_lower", params, r.lower,
                   "log|fg| " + interval(r.log_fg) + " log G " + interval(r.log_G)});
  }
}

void hilbert(std::vector<CheckRow>& out, Precision prec) {
  const char* fixtures[][2] = {{"x0", "1"},           {"x0+x1", "1"},           {"x0^2+x1^2", "1"},
                               {"x0^2+x1^2-x2^2", "2"}, {"x0^3+x1^3+2*x2^3", "2"}};
  for (const auto& fx : fixtures) {
    HomogPoly f = normalize_primitive(parse_poly(fx[0], static_cast<unsigned>(std::stoul(fx[1]))));
    for (unsigned long D = f.degree(); D <= f.degree() + 4; ++D) {
      std::string params = "f=" + f.to_string() + " D=" + std::to_string(D);
      for (SandwichVariant v : {SandwichVariant::kSym, SandwichVariant::kCovolume}) {
        SandwichCheck c = check_theorem_sandwich(f, D, prec, v);
        const char* name = v == SandwichVariant::kSym ? "theorem_sym" : "theorem_covolume";
        Verdict verdict = c.holds() ? Verdict::kTrue
                          : (c.upper == Verdict::kFalse || c.lower == Verdict::kFalse) ? Verdict::kFalse
                                                                                      : Verdict::kUnknown;
        out.push_back({"hilbert", name, params, verdict,
                       "slope " + interval(c.slope.slope) + " bounds " +
                           interval(Real::hull(c.bounds.lower, c.bounds.upper))});
      }
    }
  }
}

void heights(std::vector<CheckRow>& out, const SuiteGrid& g, Precision prec) {
  std::mt19937_64 rng(g.seed + 1);
  for (unsigned i = 0; i < g.random_count; ++i) {
    unsigned n = 1 + rng() % 3;
    unsigned long d = 1 + rng() % 4;
    HomogPoly f = normalize_primitive(random_form(rng, n, d, 50));
    Verdict v = Verdict::kUnknown;
    std::string detail;
    try {
      HeightSlopeReport r = compare_height_slope(f, prec);
      v = r.verdict;
      detail = "-mu " + interval(r.neg_slope) + " window " + interval(Real::hull(r.lower, r.upper));
    } catch (const CertificationError& e) {
      detail = e.what();
    }
    out.push_back({"heights", "height_vs_slope", "f=" + f.to_string(), v, detail});
  }
  HomogPoly conic = parse_poly("x0^2+x1^2-x2^2", 2);
  for (const auto& p : enumerate_points(conic, Rational(51, 10)).points) {
    HeightReport r = height_report(p, prec);
    out.push_back({"heights", "point_height_sandwich", p.to_string(), r.sandwich, ""});
  }
}

}  // namespace

SuiteGrid SuiteGrid::with_defaults() const {
  SuiteGrid d;
  SuiteGrid out = *this;
  if (out.n_max == 0) out.n_max = d.n_max;
  if (out.d_max == 0) out.d_max = d.d_max;
  if (out.d_max_c1 == 0) out.d_max_c1 = d.d_max_c1;
  if (out.lemma_d_max == 0) out.lemma_d_max = d.lemma_d_max;
  if (out.random_count == 0) out.random_count = d.random_count;
  if (out.seed == 0) out.seed = d.seed;
  return out;
}

Suite parse_suite(const std::string& name) {
  if (name == "appendix") return Suite::kAppendix;
  if (name == "lemmas") return Suite::kLemmas;
  if (name == "hilbert") return Suite::kHilbert;
  if (name == "heights") return Suite::kHeights;
  if (name == "all") return Suite::kAll;
  throw ParseError("unknown suite '" + name + "'", 0);
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::kAppendix: return "appendix";
    case Suite::kLemmas: return "lemmas";
    case Suite::kHilbert: return "hilbert";
    case Suite::kHeights: return "heights";
    case Suite::kAll: return "all";
  }
  return "?";
}

std::vector<CheckRow> run_suite(Suite suite, const SuiteGrid& grid, const EpsilonSplit& eps, Precision prec) {
  SuiteGrid g = grid.with_defaults();
  if (g.n_max < 2) throw DomainError("appendix grid needs n_max >= 2");
  if (g.d_max < 4 || g.d_max_c1 < 4) throw DomainError("appendix grid needs D_max >= 4");
  std::vector<CheckRow> out;
  bool all = suite == Suite::kAll;
  if (all || suite == Suite::kAppendix) appendix(out, g, eps, prec);
  if (all || suite == Suite::kLemmas) lemmas(out, g, prec);
  if (all || suite == Suite::kHilbert) hilbert(out, prec);
  if (all || suite == Suite::kHeights) heights(out, g, prec);
  return out;
}

}  // namespace ahs
