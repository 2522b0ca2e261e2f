#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ahs/config.hpp"
#include "ahs/errors.hpp"
#include "commands.hpp"
#include "report.hpp"

using namespace ahs;
using namespace ahs::cli;

namespace {

struct GlobalOptions {
  std::optional<std::string> config_file;
  std::optional<long> precision;
  std::optional<std::string> epsilon;
  std::optional<unsigned long> scan_max;
  std::optional<std::uint64_t> enumeration_cap;
  std::optional<std::string> format;
};

RunConfig build_config(const GlobalOptions& g) {
  RunConfig cfg = load_default_config();
  if (g.config_file) cfg = load_config_file(*g.config_file, cfg);
  if (g.precision) apply_setting(cfg, "precision_bits", std::to_string(*g.precision));
  if (g.epsilon) apply_setting(cfg, "epsilon", *g.epsilon);
  if (g.scan_max) apply_setting(cfg, "scan_max", std::to_string(*g.scan_max));
  if (g.enumeration_cap) apply_setting(cfg, "enumeration_cap", std::to_string(*g.enumeration_cap));
  if (g.format) apply_setting(cfg, "output_format", *g.format);
  return cfg;
}

int fail(const std::string& kind, const std::string& message, int code, std::optional<std::size_t> pos = {}) {
  Json err = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  if (pos) err["position"] = *pos;
  std::cerr << Json{{"error", err}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic Hilbert-Samuel constants, heights and small-height point covering"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config_file, "key=value config file (overrides $" + std::string(kConfigEnvVar) + ")");
  app.add_option("--precision", g.precision, "working precision in bits, 64 to 4096");
  app.add_option("--epsilon", g.epsilon, "split parameter p/q in (0, 1/6)");
  app.add_option("--scan-max", g.scan_max, "last D scanned for B0 (default 10*delta+100)");
  app.add_option("--enumeration-cap", g.enumeration_cap, "maximum number of integer tuples scanned");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CArgs c_args;
  auto* c = app.add_subcommand("c", "the constant C(n,D)");
  c->add_option("--n", c_args.n, "number of variables minus one")->required();
  c->add_option("--d", c_args.D, "degree D")->required();
  c->add_option("--method", c_args.method, "brute, recurrence or bounds")
      ->check(CLI::IsMember({"brute", "recurrence", "bounds"}));

  TableArgs t_args;
  auto* table = app.add_subcommand("table", "one row per D of exact values and sandwiches");
  table->add_option("--n", t_args.n)->required();
  table->add_option("--dmax", t_args.d_max)->required();
  table->add_option("--what", t_args.what, "c, q, s or coeffs")->check(CLI::IsMember({"c", "q", "s", "coeffs"}));

  HeightArgs h_args;
  auto* height = app.add_subcommand("height", "heights of a point or a hypersurface");
  auto* hp = height->add_option("--poly", h_args.poly, "homogeneous form, e.g. \"x0^2+x1^2\"");
  auto* hq = height->add_option("--point", h_args.point, "projective point, e.g. \"[3:4:5]\"");
  hp->excludes(hq);
  height->add_option("--n", h_args.n, "ambient dimension (default: largest variable index)");

  SlopeArgs s_args;
  auto* slope = app.add_subcommand("slope", "arithmetic Hilbert-Samuel slope of F_D and its bounds");
  slope->add_option("--poly", s_args.poly)->required();
  slope->add_option("--n", s_args.n);
  slope->add_option("--d", s_args.D)->required();
  slope->add_option("--mode", s_args.mode, "exact, bounds or b0")->check(CLI::IsMember({"exact", "bounds", "b0"}));

  PointsArgs p_args;
  auto* points = app.add_subcommand("points", "rational points of bounded height and their covering");
  points->add_option("--poly", p_args.poly)->required();
  points->add_option("--n", p_args.n);
  points->add_option("--bound,-B", p_args.bound, "height bound, integer, decimal or p/q")->required();
  points->add_flag("--with-cover", p_args.with_cover, "search for an auxiliary form through the points");

  VerifyArgs v_args;
  auto* verify = app.add_subcommand("verify", "run a property suite; exit 0 iff every check is certified");
  verify->add_option("--suite", v_args.suite, "appendix, lemmas, hilbert, heights or all")
      ->check(CLI::IsMember({"appendix", "lemmas", "hilbert", "heights", "all"}));
  verify->add_option("--n-max", v_args.grid.n_max);
  verify->add_option("--d-max", v_args.grid.d_max);
  verify->add_option("--d-max-c1", v_args.grid.d_max_c1);
  verify->add_option("--lemma-d-max", v_args.grid.lemma_d_max);
  verify->add_option("--random-count", v_args.grid.random_count);
  verify->add_option("--seed", v_args.grid.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    RunConfig cfg = build_config(g);
    Report r;
    if (*c) {
      r = cmd_c(c_args, cfg);
    } else if (*table) {
      r = cmd_table(t_args, cfg);
    } else if (*height) {
      r = cmd_height(h_args, cfg);
    } else if (*slope) {
      r = cmd_slope(s_args, cfg);
    } else if (*points) {
      r = cmd_points(p_args, cfg);
    } else {
      r = cmd_verify(v_args, cfg);
    }
    if (cfg.output_format == OutputFormat::kCsv) {
      write_csv(std::cout, r);
    } else {
      write_json(std::cout, r);
    }
    return r.exit_code;
  } catch (const ParseError& e) {
    return fail("parse", e.what(), kUsageError, e.position());
  } catch (const DomainError& e) {
    return fail("domain", e.what(), kUsageError);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), kResourceCap);
  } catch (const CertificationError& e) {
    return fail("certification", e.what(), kCertificationFailure);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kCertificationFailure);
  }
}
