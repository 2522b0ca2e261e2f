#include "commands.hpp"

#include <cctype>

#include "ahs/asymptotics.hpp"
#include "ahs/combinatorics.hpp"
#include "ahs/errors.hpp"
#include "ahs/heights.hpp"
#include "ahs/hilbert.hpp"
#include "ahs/points.hpp"

namespace ahs::cli {

namespace {

Report start(const std::string& name, const RunConfig& cfg) {
  Report r;
  r.command = name;
  r.config = config_json(cfg);
  r.metadata["assumptions"] = Json::array({
      "H_0 = 0 (empty harmonic sum)",
      "base field Q; archimedean norm is l2 on coordinates; finite places vanish on primitive forms",
      "epsilon split = " + cfg.epsilon.value().get_str(),
      "a3(D) uses lower integration limit 1 in the x log x and log x integrals",
  });
  return r;
}

void add_resolution(Report& r, const RunConfig& cfg) {
  const SandwichResolution& res = resolve_c_sandwich(cfg.epsilon, cfg.precision_bits);
  Json j;
  j["coefficient_source"] = to_string(res.source);
  j["seed_convention"] = res.convention.name();
  j["validated"] = res.validated;
  Json cands = Json::array();
  for (const auto& c : res.candidates) {
    cands.push_back({{"source", to_string(c.source)},
                     {"convention", c.convention.name()},
                     {"checked", c.checked},
                     {"failures", c.failures},
                     {"first_failure", c.first_failure}});
  }
  j["candidates"] = cands;
  r.metadata["c_sandwich_resolution"] = j;
}

HomogPoly read_poly(const std::string& text, std::optional<unsigned> n) {
  return n ? parse_poly(text, *n) : parse_poly(text);
}

std::string lo(const Real& x) { return enclosure(x)["lo"].get<std::string>(); }
std::string hi(const Real& x) { return enclosure(x)["hi"].get<std::string>(); }

Json bound_pair(const BoundPair& b) { return {{"lower", enclosure(b.lower)}, {"upper", enclosure(b.upper)}}; }

Json sandwich_json(const SandwichCheck& c) {
  return {{"bounds", bound_pair(c.bounds)},
          {"slope", enclosure(c.slope.slope)},
          {"X", c.X.get_str()},
          {"upper", verdict_name(c.upper)},
          {"lower", verdict_name(c.lower)},
          {"holds", c.holds()}};
}

}  // namespace

Rational parse_exact(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty number", 0);
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    ++i;
  }
  std::string digits, frac, den;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac += s[i++];
  } else if (i < s.size() && s[i] == '/') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
    if (den.empty()) throw ParseError("expected a denominator", i);
  }
  if (digits.empty() && frac.empty()) throw ParseError("expected a number", i);
  if (i != s.size()) throw ParseError("unexpected character", i);
  Natural num(digits.empty() ? "0" : digits + frac);
  Natural d = 1;
  if (!frac.empty()) mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
  if (!den.empty()) d = Natural(den);
  if (d == 0) throw ParseError("zero denominator", i);
  Rational q(neg ? Natural(-num) : num, d);
  q.canonicalize();
  return q;
}

Report cmd_c(const CArgs& a, const RunConfig& cfg) {
  Report r = start("c", cfg);
  const Precision p = cfg.precision_bits;
  r.arguments = {{"n", a.n}, {"D", a.D}, {"method", a.method}};
  r.results["n"] = a.n;
  r.results["D"] = a.D;
  r.results["method"] = a.method;
  if (a.method == "brute") {
    r.results["value"] = enclosure(c_bruteforce(a.n, a.D, p));
  } else if (a.method == "recurrence") {
    r.results["value"] = enclosure(c_recurrence(a.n, a.D, p));
  } else if (a.method == "bounds") {
    if (a.n < 1 || a.D < 2) throw DomainError("bounds need n >= 1 and D >= 2");
    BoundPair b = c_bounds(a.n, a.D, cfg.epsilon, p);
    Real exact = c_recurrence(a.n, a.D, p);
    bool contained = b.certifies(exact);
    r.results["bounds"] = bound_pair(b);
    r.results["exact"] = enclosure(exact);
    r.results["contained"] = contained;
    add_resolution(r, cfg);
    if (!contained) r.exit_code = kCertificationFailure;
  } else {
    throw ParseError("unknown method '" + a.method + "'", 0);
  }
  return r;
}

Report cmd_table(const TableArgs& a, const RunConfig& cfg) {
  Report r = start("table", cfg);
  const Precision p = cfg.precision_bits;
  r.arguments = {{"n", a.n}, {"dmax", a.d_max}, {"what", a.what}};
  Json rows = Json::array();
  bool any_failed = false;
  if (a.what == "coeffs") {
    r.table.columns = {"n",           "a",           "b_closed", "b_derived",     "c_closed_lo", "c_closed_hi",
                       "c_recursion_lo", "c_recursion_hi", "c_derived_lo", "c_derived_hi"};
    for (unsigned k = 1; k <= a.n; ++k) {
      Real cc = c_main_coeffs(k, CoeffSource::kClosedForm, p).c;
      Real cr = c_main_coeffs(k, CoeffSource::kRecursion, p).c;
      Real cd = c_main_coeffs(k, CoeffSource::kDerived, p).c;
      r.table.rows.push_back({std::to_string(k), coeff_a(k).get_str(), coeff_b_closed(k).get_str(),
                              coeff_b_derived(k).get_str(), lo(cc), hi(cc), lo(cr), hi(cr), lo(cd), hi(cd)});
      rows.push_back({{"n", k},
                      {"a", coeff_a(k).get_str()},
                      {"b_closed", coeff_b_closed(k).get_str()},
                      {"b_derived", coeff_b_derived(k).get_str()},
                      {"c_closed_form", enclosure(cc)},
                      {"c_recursion", enclosure(cr)},
                      {"c_derived", enclosure(cd)}});
    }
    r.results["rows"] = rows;
    return r;
  }
  if (a.what != "c" && a.what != "q" && a.what != "s") throw ParseError("unknown table '" + a.what + "'", 0);
  if (a.what == "c") add_resolution(r, cfg);
  r.table.columns = {"D", "exact_lo", "exact_hi", "lower_lo", "lower_hi", "upper_lo", "upper_hi", "contained",
                     "status"};
  for (unsigned long D = 0; D <= a.d_max; ++D) {
    Json row;
    row["D"] = D;
    std::vector<std::string> csv{std::to_string(D), "", "", "", "", "", "", "", ""};
    try {
      Real exact = a.what == "c" ? c_recurrence(a.n, D, p) : a.what == "q" ? q_exact(a.n, D, p) : s_exact(a.n, D, p);
      row["exact"] = enclosure(exact);
      csv[1] = lo(exact);
      csv[2] = hi(exact);
      bool in_domain = D >= 2 && (a.what == "c" ? a.n >= 1 : a.n >= 2);
      if (in_domain) {
        BoundPair b = a.what == "c"   ? c_bounds(a.n, D, cfg.epsilon, p)
                      : a.what == "q" ? q_bounds(a.n, D, cfg.epsilon, p)
                                      : s_bounds(a.n, D, cfg.epsilon, p);
        bool contained = b.certifies(exact);
        any_failed = any_failed || !contained;
        row["bounds"] = bound_pair(b);
        row["contained"] = contained;
        row["status"] = "ok";
        csv[3] = lo(b.lower);
        csv[4] = hi(b.lower);
        csv[5] = lo(b.upper);
        csv[6] = hi(b.upper);
        csv[7] = contained ? "true" : "false";
        csv[8] = "ok";
      } else {
        row["status"] = "exact only";
        csv[8] = "exact only";
      }
    } catch (const ResourceError& e) {
      row["status"] = std::string("cap exceeded: ") + e.what();
      csv[8] = row["status"].get<std::string>();
    }
    rows.push_back(row);
    r.table.rows.push_back(csv);
  }
  r.results["n"] = a.n;
  r.results["rows"] = rows;
  if (any_failed) r.exit_code = kCertificationFailure;
  return r;
}

Report cmd_height(const HeightArgs& a, const RunConfig& cfg) {
  Report r = start("height", cfg);
  const Precision p = cfg.precision_bits;
  if (a.point.has_value() == a.poly.has_value()) throw ParseError("give exactly one of --point or --poly", 0);
  if (a.point) {
    r.arguments = {{"point", *a.point}};
    ProjPoint pt = parse_point(*a.point);
    HeightReport h = height_report(pt, p);
    r.results["point"] = pt.to_string();
    r.results["weil"] = enclosure(h.weil);
    r.results["arakelov"] = enclosure(h.arakelov);
    r.results["multiplicative_H"] = enclosure(h.multiplicative_H);
    r.results["weil_arakelov_sandwich"] = verdict_name(h.sandwich);
    if (h.sandwich != Verdict::kTrue) r.exit_code = kCertificationFailure;
    return r;
  }
  r.arguments = {{"poly", *a.poly}};
  if (a.n) r.arguments["n"] = *a.n;
  HomogPoly f = read_poly(*a.poly, a.n);
  HeightSlopeReport h = compare_height_slope(f, p);
  r.results["poly"] = f.to_string();
  r.results["primitive"] = normalize_primitive(f).to_string();
  r.results["n"] = f.n();
  r.results["degree"] = f.degree();
  r.results["classical_height"] = enclosure(h.height);
  r.results["bombieri_norm"] = enclosure(bombieri_norm(normalize_primitive(f), p));
  r.results["slope_IX"] = enclosure(-h.neg_slope);
  r.results["comparison"] = {{"lower", enclosure(h.lower)},
                             {"neg_slope", enclosure(h.neg_slope)},
                             {"upper", enclosure(h.upper)},
                             {"verdict", verdict_name(h.verdict)},
                             {"precision", h.precision}};
  if (h.verdict != Verdict::kTrue) r.exit_code = kCertificationFailure;
  return r;
}

Report cmd_slope(const SlopeArgs& a, const RunConfig& cfg) {
  Report r = start("slope", cfg);
  const Precision p = cfg.precision_bits;
  r.arguments = {{"poly", a.poly}, {"D", a.D}, {"mode", a.mode}};
  if (a.n) r.arguments["n"] = *a.n;
  HomogPoly f = normalize_primitive(read_poly(a.poly, a.n));
  const unsigned n = f.n();
  const unsigned long delta = f.degree();
  r.results["poly"] = f.to_string();
  r.results["n"] = n;
  r.results["delta"] = delta;
  r.results["D"] = a.D;
  Real mu = slope_IX(f, p);
  r.results["slope_IX"] = enclosure(mu);
  const bool below = a.D < delta;
  r.results["F_D_equals_E_D"] = below;

  if (a.mode == "exact") {
    SlopeResult s = slope_FD_exact_sym(f, a.D, p);
    r.results["slope_sym"] = enclosure(s.slope);
    r.results["slope_john"] = enclosure(slope_FD_john(f, a.D, p).slope);
    if (!below) r.results["slope_covolume"] = enclosure(slope_FD_covolume(f, a.D, p).slope);
    return r;
  }
  if (a.mode == "bounds") {
    if (below) {
      r.results["slope_sym"] = enclosure(slope_ED_sym(n, a.D, p));
      r.results["note"] = "D < delta: F_D equals E_D and the slope is that of E_D";
      return r;
    }
    SandwichCheck sym = check_theorem_sandwich(f, a.D, p, SandwichVariant::kSym);
    SandwichCheck cov = check_theorem_sandwich(f, a.D, p, SandwichVariant::kCovolume);
    r.results["sym"] = sandwich_json(sym);
    r.results["john"] = {{"bounds", bound_pair(theorem_bounds_john(n, delta, mu, a.D, p))},
                         {"slope", enclosure(slope_FD_john(f, a.D, p).slope)}};
    r.results["covolume"] = sandwich_json(cov);
    if (!sym.holds()) r.exit_code = kCertificationFailure;
    return r;
  }
  if (a.mode == "b0") {
    if (n < 2) throw DomainError("B0 needs n >= 2");
    if (below) throw DomainError("B0 bound needs D >= delta");
    const unsigned long scan = cfg.scan_max_for(delta);
    B0Result b0 = b0_const(n, delta, scan, cfg.epsilon, p);
    Real lower = theorem_b0_lower(n, delta, mu, a.D, scan, cfg.epsilon, p);
    SlopeResult john = slope_FD_john(f, a.D, p);
    Verdict v = compare_le(lower, john.slope);
    r.results["b0"] = {{"value", enclosure(b0.value)},
                       {"closed_part", enclosure(b0.closed_part)},
                       {"scan_min", enclosure(b0.scan_min)},
                       {"argmin_D", b0.argmin_D},
                       {"tail_bound", enclosure(b0.tail_bound)},
                       {"tail_decreasing", b0.tail_decreasing},
                       {"scan_max", b0.scan_max},
                       {"convention", b0.convention.name()}};
    r.results["lower_bound"] = enclosure(lower);
    r.results["slope_john"] = enclosure(john.slope);
    r.results["lower_bound_le_slope"] = verdict_name(v);
    add_resolution(r, cfg);
    if (v != Verdict::kTrue) r.exit_code = kCertificationFailure;
    return r;
  }
  throw ParseError("unknown mode '" + a.mode + "'", 0);
}

Report cmd_points(const PointsArgs& a, const RunConfig& cfg) {
  Report r = start("points", cfg);
  const Precision p = cfg.precision_bits;
  r.arguments = {{"poly", a.poly}, {"B", a.bound}, {"with_cover", a.with_cover}};
  if (a.n) r.arguments["n"] = *a.n;
  HomogPoly f = read_poly(a.poly, a.n);
  Rational B = parse_exact(a.bound);
  r.results["poly"] = f.to_string();
  r.results["B"] = B.get_str();
  PointSet s = enumerate_points(f, B, cfg.enumeration_cap);
  Json pts = Json::array();
  for (const auto& pt : s.points) pts.push_back(pt.to_string());
  r.results["N"] = s.points.size();
  r.results["points"] = pts;
  r.results["candidates_scanned"] = s.candidates;
  if (f.n() < 2) {
    r.results["threshold"] = nullptr;
    r.results["note"] = "covering threshold needs n >= 2";
    return r;
  }
  const unsigned long scan = cfg.scan_max_for(f.degree());
  CoveringThreshold t = covering_threshold(f, scan, cfg.epsilon, p);
  bool below = Real(B, p).certainly_lt(t.threshold);
  r.results["threshold"] = {{"classical_height", enclosure(t.height)},
                            {"log_threshold", enclosure(t.log_threshold)},
                            {"threshold", enclosure(t.threshold)},
                            {"b0", enclosure(t.b0.value)},
                            {"scan_max", scan}};
  r.results["below_threshold"] = below;
  add_resolution(r, cfg);
  if (!a.with_cover) return r;
  Json cover;
  if (!below) {
    cover["certified"] = false;
    cover["status"] = "threshold not met";
  } else {
    CoverCertificate c = find_auxiliary(f, s.points, f.degree());
    bool recheck = c.found && recheck_certificate(f, s.points, c);
    cover["certified"] = recheck;
    cover["status"] = !c.found ? "no auxiliary form found" : recheck ? "covered" : "certificate failed re-verification";
    if (c.found) {
      cover["auxiliary"] = c.auxiliary->to_string();
      cover["degree"] = c.degree;
      cover["vanishing_checked"] = c.vanishing_checked;
      cover["independence_checked"] = c.independence_checked;
    }
    if (!c.note.empty()) cover["note"] = c.note;
    if (!recheck) r.exit_code = kCertificationFailure;
  }
  r.results["cover"] = cover;
  return r;
}

Report cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
  Report r = start("verify", cfg);
  Suite suite = parse_suite(a.suite);
  SuiteGrid g = a.grid.with_defaults();
  r.arguments = {{"suite", a.suite}};
  r.results["grid"] = {{"n_max", g.n_max},
                       {"d_max", g.d_max},
                       {"d_max_c1", g.d_max_c1},
                       {"lemma_d_max", g.lemma_d_max},
                       {"random_count", g.random_count},
                       {"seed", g.seed}};
  std::vector<CheckRow> rows = run_suite(suite, g, cfg.epsilon, cfg.precision_bits);
  if (suite == Suite::kAppendix || suite == Suite::kAll) add_resolution(r, cfg);
  r.table.columns = {"suite", "check", "params", "verdict", "detail"};
  Json summary = Json::object();
  Json failures = Json::array();
  std::size_t failed = 0;
  for (const auto& row : rows) {
    r.table.rows.push_back({row.suite, row.check, row.params, verdict_name(row.verdict), row.detail});
    std::string k = row.suite + "/" + row.check;
    if (!summary.contains(k)) summary[k] = {{"checked", 0}, {"certified", 0}};
    summary[k]["checked"] = summary[k]["checked"].get<std::size_t>() + 1;
    if (row.verdict == Verdict::kTrue) {
      summary[k]["certified"] = summary[k]["certified"].get<std::size_t>() + 1;
    } else {
      if (failed++ == 0) r.results["first_failure"] = {{"check", k}, {"params", row.params}, {"detail", row.detail}};
      failures.push_back({{"check", k}, {"params", row.params}, {"verdict", verdict_name(row.verdict)}});
    }
  }
  r.results["checked"] = rows.size();
  r.results["failed"] = failed;
  r.results["summary"] = summary;
  r.results["failures"] = failures;
  if (failed) r.exit_code = kCertificationFailure;
  return r;
}

}  // namespace ahs::cli
