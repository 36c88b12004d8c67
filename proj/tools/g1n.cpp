// Command-line front end. Every command prints deterministic output for
// fixed inputs and format; exact rationals are rendered as "p/q" strings.
// Exit codes: 0 success, 1 a verification check failed, 2 malformed
// arguments or invalid parameter combinations.

#include "g1n/cones.hpp"
#include "g1n/coniveau.hpp"
#include "g1n/flagpush.hpp"
#include "g1n/json_io.hpp"
#include "g1n/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using g1n::Json;

enum class Format { kJson, kCsv };

Format resolve_format(bool json_flag, bool csv_flag, Format fallback) {
  if (json_flag) return Format::kJson;
  if (csv_flag) return Format::kCsv;
  // The only environment variable consulted: default output format.
  if (const char* env = std::getenv("G1N_FORMAT")) {
    const std::string s(env);
    if (s == "csv") return Format::kCsv;
    if (s == "json") return Format::kJson;
  }
  return fallback;
}

g1n::SchurClass build_target(const std::string& target, int n,
                             const std::vector<int>& degrees, int m,
                             int codim) {
  const g1n::GrassmannContext ctx(n);
  if (target == "fg" || target == "f") {
    if (degrees.empty())
      throw std::invalid_argument("--degrees is required for target " +
                                  target);
    const g1n::MultiDegree md(n, degrees);
    return g1n::from_lc2(
        target == "fg" ? g1n::class_fg(md) : g1n::class_f(md), ctx);
  }
  if (target == "q") {
    if (m < 2) throw std::invalid_argument("--m (>= 2) is required for target q");
    return g1n::from_lc2(g1n::q_class(m), ctx);
  }
  if (target == "lpow") {
    if (codim < 0)
      throw std::invalid_argument("--codim (>= 0) is required for target lpow");
    return g1n::l_power(codim, ctx);
  }
  throw std::invalid_argument("unknown target '" + target +
                              "' (expected fg, f, q or lpow)");
}

void enumerate_degrees(int r, int max_d, int lo, std::vector<int>& acc,
                       const std::function<void(const std::vector<int>&)>& emit) {
  if (r == 0) {
    emit(acc);
    return;
  }
  for (int d = lo; d <= max_d; ++d) {
    acc.push_back(d);
    enumerate_degrees(r - 1, max_d, d, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "g1n: exact intersection theory on the Grassmannian of lines G(1,n): "
      "Schubert products, Chern classes of symmetric powers, incidence-class "
      "pushforwards, effective-cone certificates and coniveau numerology"};
  app.require_subcommand(1);

  // coniveau
  auto* cmd_coniveau = app.add_subcommand(
      "coniveau", "Decide the coniveau criterion n >= sum d + (c-1)*max d");
  int co_n = 0, co_c = 2;
  std::vector<int> co_degrees;
  cmd_coniveau->add_option("--n", co_n, "ambient projective dimension")
      ->required();
  cmd_coniveau->add_option("--degrees", co_degrees, "hypersurface degrees")
      ->required();
  cmd_coniveau->add_option("--c", co_c, "coniveau level (default 2)");
  bool co_json = false;
  cmd_coniveau->add_flag("--json", co_json, "emit JSON (default)");

  // dims
  auto* cmd_dims = app.add_subcommand(
      "dims", "Dimension and bound report for one multidegree");
  int di_n = 0;
  std::vector<int> di_degrees;
  bool di_json = false, di_csv = false;
  cmd_dims->add_option("--n", di_n, "ambient projective dimension")->required();
  cmd_dims->add_option("--degrees", di_degrees, "hypersurface degrees")
      ->required();
  cmd_dims->add_flag("--json", di_json, "emit JSON (default)");
  cmd_dims->add_flag("--csv", di_csv, "emit a CSV header and row");

  // fg-class
  auto* cmd_fg = app.add_subcommand(
      "fg-class",
      "Class of lines through a general point: the top Chern class of "
      "Sym^(n-sum d-1) E in l and c2");
  int fg_n = 0;
  std::vector<int> fg_degrees;
  bool fg_schur = false, fg_json = false;
  cmd_fg->add_option("--n", fg_n, "ambient projective dimension")->required();
  cmd_fg->add_option("--degrees", fg_degrees, "hypersurface degrees")
      ->required();
  cmd_fg->add_flag("--schur", fg_schur,
                   "expand in the Schubert basis of G(1,n) instead");
  cmd_fg->add_flag("--json", fg_json, "emit JSON (default)");

  // zprime
  auto* cmd_zprime = app.add_subcommand(
      "zprime",
      "Pushforward of the degree-d incidence class to G(1,n), with its "
      "pure-l coefficient");
  int zp_n = 0, zp_d = 0;
  bool zp_json = false;
  cmd_zprime->add_option("--n", zp_n, "ambient projective dimension")
      ->required();
  cmd_zprime->add_option("--d", zp_d, "hypersurface degree")->required();
  cmd_zprime->add_flag("--json", zp_json, "emit JSON (default)");

  // pair
  auto* cmd_pair = app.add_subcommand(
      "pair", "Pairing vector of a class against the complementary Schubert "
              "basis");
  int pa_n = 0, pa_m = -1, pa_codim = -1;
  std::vector<int> pa_degrees;
  std::string pa_target = "fg";
  bool pa_json = false;
  cmd_pair->add_option("--n", pa_n, "ambient projective dimension")->required();
  cmd_pair->add_option("--target", pa_target,
                       "fg (default), f, q or lpow");
  cmd_pair->add_option("--degrees", pa_degrees,
                       "hypersurface degrees (targets fg, f)");
  cmd_pair->add_option("--m", pa_m, "symmetric power (target q)");
  cmd_pair->add_option("--codim", pa_codim, "power of l (target lpow)");
  cmd_pair->add_flag("--json", pa_json, "emit JSON (default)");

  // cone
  auto* cmd_cone = app.add_subcommand(
      "cone",
      "Effective-cone certificate (verdict big / effective-boundary / "
      "not-effective with witnesses and epsilon margin)");
  int cn_n = 0, cn_m = -1, cn_codim = -1;
  std::vector<int> cn_degrees;
  std::string cn_target = "fg";
  bool cn_json = false;
  cmd_cone->add_option("--n", cn_n, "ambient projective dimension")->required();
  cmd_cone->add_option("--target", cn_target, "fg (default), f, q or lpow");
  cmd_cone->add_option("--degrees", cn_degrees,
                       "hypersurface degrees (targets fg, f)");
  cmd_cone->add_option("--m", cn_m, "symmetric power (target q)");
  cmd_cone->add_option("--codim", cn_codim, "power of l (target lpow)");
  cmd_cone->add_flag("--json", cn_json, "emit JSON (default)");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify",
      "Run verification scenarios: leok-pipeline, exceptional-schubert, "
      "mprime-identity, factorization-erratum, remark-not-big, beta-shape, "
      "plus classical degree anchors (27, 2875, 45)");
  bool ve_all = false, ve_parallel = false, ve_timings = false,
       ve_json = false;
  int ve_max_n = 12, ve_max_d = 5, ve_n = -1, ve_d = -1;
  std::string ve_check;
  cmd_verify->add_flag("--all", ve_all, "run the whole scenario grid");
  cmd_verify->add_option(
      "--check", ve_check,
      "one scenario: leok-pipeline | exceptional-schubert | mprime-identity "
      "| factorization-erratum | remark-not-big | beta-shape");
  cmd_verify->add_option("--max-n", ve_max_n, "grid bound on n (default 12)");
  cmd_verify->add_option("--max-d", ve_max_d, "grid bound on d (default 5)");
  cmd_verify->add_option("--n", ve_n, "n for a single --check");
  cmd_verify->add_option("--d", ve_d, "d (or total degree) for --check");
  cmd_verify->add_flag("--parallel", ve_parallel,
                       "fan scenarios out across OpenMP threads");
  cmd_verify->add_flag("--timings", ve_timings,
                       "include elapsedMs (breaks byte determinism)");
  cmd_verify->add_flag("--json", ve_json, "emit JSON (default)");

  // sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "Numerology reports over a grid of multidegrees, streamed "
               "row by row");
  int sw_max_n = 12, sw_max_d = 5, sw_max_r = 1;
  bool sw_json = false, sw_csv = false;
  cmd_sweep->add_option("--max-n", sw_max_n, "largest n (default 12)");
  cmd_sweep->add_option("--max-d", sw_max_d, "largest degree (default 5)");
  cmd_sweep->add_option("--max-r", sw_max_r,
                        "largest number of hypersurfaces (default 1)");
  cmd_sweep->add_flag("--json", sw_json, "emit JSON lines");
  cmd_sweep->add_flag("--csv", sw_csv, "emit CSV (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_coniveau->parsed()) {
      const g1n::MultiDegree md(co_n, co_degrees);
      std::cout << Json{{"satisfied", g1n::coniveau_at_least(md, co_c)}}.dump()
                << "\n";
      return 0;
    }

    if (cmd_dims->parsed()) {
      const auto rep = g1n::dimensions(g1n::MultiDegree(di_n, di_degrees));
      if (resolve_format(di_json, di_csv, Format::kJson) == Format::kCsv)
        std::cout << g1n::numerology_csv_header() << "\n"
                  << g1n::numerology_csv_row(rep) << "\n";
      else
        std::cout << g1n::to_json(rep).dump() << "\n";
      return 0;
    }

    if (cmd_fg->parsed()) {
      const g1n::MultiDegree md(fg_n, fg_degrees);
      const g1n::LC2Poly cls = g1n::class_fg(md);
      if (fg_schur)
        std::cout << g1n::to_json(
                         g1n::from_lc2(cls, g1n::GrassmannContext(fg_n)))
                         .dump()
                  << "\n";
      else
        std::cout << g1n::to_json(cls).dump() << "\n";
      return 0;
    }

    if (cmd_zprime->parsed()) {
      const auto zp = g1n::z_prime_class(zp_n, zp_d);
      Json out{{"n", zp_n}, {"d", zp_d}, {"degenerate", zp.degenerate}};
      if (zp.cls.is_zero())
        out["weightedDegree"] = nullptr;
      else
        out["weightedDegree"] = zp.cls.weighted_degree();
      out["pureLCoefficient"] =
          g1n::rat_to_string(zp.cls.pure_l_coefficient());
      out["class"] = g1n::to_json(zp.cls);
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (cmd_pair->parsed()) {
      const auto cls =
          build_target(pa_target, pa_n, pa_degrees, pa_m, pa_codim);
      int codim = 0;
      cls.is_homogeneous(&codim);
      Json pairings = Json::array();
      for (const auto& [q, v] : g1n::pairing_vector(cls))
        pairings.push_back(
            Json{{"a", q.a}, {"b", q.b}, {"value", g1n::rat_to_string(v)}});
      std::cout << Json{{"n", pa_n},
                        {"target", pa_target},
                        {"codim", codim},
                        {"pairings", std::move(pairings)}}
                       .dump()
                << "\n";
      return 0;
    }

    if (cmd_cone->parsed()) {
      const auto cls =
          build_target(cn_target, cn_n, cn_degrees, cn_m, cn_codim);
      std::cout << g1n::to_json(g1n::analyze(cls)).dump() << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      std::vector<g1n::VerificationReport> reports;
      if (ve_all) {
        reports = g1n::run_all({ve_max_n, ve_max_d, ve_parallel});
      } else if (!ve_check.empty()) {
        const auto need = [](int v, const char* what) {
          if (v < 0)
            throw std::invalid_argument(std::string("--check needs ") + what);
          return v;
        };
        if (ve_check == "leok-pipeline")
          reports.push_back(g1n::verify_leok_pipeline(need(ve_n, "--n"),
                                                      need(ve_d, "--d")));
        else if (ve_check == "exceptional-schubert")
          reports.push_back(g1n::verify_exceptional_schubert(
              need(ve_n, "--n"), need(ve_d, "--d")));
        else if (ve_check == "mprime-identity")
          reports.push_back(g1n::verify_mprime_identity(need(ve_d, "--d")));
        else if (ve_check == "factorization-erratum")
          reports.push_back(g1n::verify_factorization_erratum(
              need(ve_n, "--n"), need(ve_d, "--d")));
        else if (ve_check == "remark-not-big")
          reports.push_back(
              g1n::verify_remark_not_big(need(ve_n, "--n"), need(ve_d, "--d")));
        else if (ve_check == "beta-shape")
          reports.push_back(g1n::verify_beta_shape(need(ve_d, "--d")));
        else
          throw std::invalid_argument("unknown check '" + ve_check + "'");
      } else {
        throw std::invalid_argument("verify needs --all or --check NAME");
      }
      Json out = Json::array();
      for (const auto& rep : reports)
        out.push_back(g1n::report_to_json(rep, ve_timings));
      std::cout << out.dump() << "\n";
      return g1n::all_passed(reports) ? 0 : 1;
    }

    if (cmd_sweep->parsed()) {
      const Format fmt = resolve_format(sw_json, sw_csv, Format::kCsv);
      if (fmt == Format::kCsv)
        std::cout << g1n::numerology_csv_header() << "\n";
      std::vector<int> acc;
      for (int n = 2; n <= sw_max_n; ++n)
        for (int r = 1; r <= sw_max_r; ++r)
          enumerate_degrees(r, sw_max_d, 1, acc,
                            [&](const std::vector<int>& degrees) {
                              const auto rep = g1n::dimensions(
                                  g1n::MultiDegree(n, degrees));
                              if (fmt == Format::kCsv)
                                std::cout << g1n::numerology_csv_row(rep)
                                          << "\n";
                              else
                                std::cout << g1n::to_json(rep).dump() << "\n";
                            });
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
