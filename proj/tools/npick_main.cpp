// Command-line front end. All numerics go through the shared C API in
// npick/npick.h; this file only parses arguments, moves bytes and sets exit
// codes: 0 success, 2 invalid input, 3 not strictly solvable, 4 failed check.
#include <npick/npick.h>

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitInvalidInput = 2;
constexpr int kExitNotStrictlySolvable = 3;
constexpr int kExitCheckFailed = 4;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void bail(int code, const std::string& message) {
  throw CliError{code, message};
}

void check_status(int status) {
  if (status == NP_OK) return;
  std::string message =
      std::string(np_status_name(status)) + ": " + np_last_error();
  if (status == NP_ERR_NOT_STRICTLY_SOLVABLE)
    bail(kExitNotStrictlySolvable, message);
  bail(kExitInvalidInput, message);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  np_free_string(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bail(kExitInvalidInput, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) bail(kExitInvalidInput, "cannot write file: " + out_path);
  out << content << '\n';
}

// Optional JSON config file; keys use the flag spellings ("seed", "tol",
// "out", "budget", "alpha", "gamma-count", "grid", ...). Explicit flags win.
struct ConfigFile {
  Json values = Json::object();

  void load(const std::string& path) {
    if (path.empty()) return;
    values = Json::parse(read_file(path), nullptr, false);
    if (values.is_discarded() || !values.is_object())
      bail(kExitInvalidInput, "config file must hold a JSON object: " + path);
  }

  template <class T>
  void fill(const CLI::Option* option, const char* key, T& slot) const {
    if (option->count() > 0) return;
    if (auto it = values.find(key); it != values.end()) slot = it->get<T>();
  }
};

struct ProblemHandle {
  np_problem* ptr = nullptr;
  ~ProblemHandle() { np_problem_free(ptr); }
};

struct ParametrizationHandle {
  np_parametrization* ptr = nullptr;
  ~ParametrizationHandle() { np_parametrization_free(ptr); }
};

struct BlaschkeHandle {
  np_blaschke* ptr = nullptr;
  ~BlaschkeHandle() { np_blaschke_free(ptr); }
};

Json generator_spec(const std::string& kind, int count, int per_annulus,
                    double exponent, const std::string& angle_rule,
                    double theta0, std::uint64_t seed) {
  Json g{{"kind", kind},
         {"count", count},
         {"angle_rule", angle_rule},
         {"theta0", theta0},
         {"seed", seed}};
  if (kind == "exponential") g["per_annulus"] = per_annulus;
  if (kind == "power") g["exponent"] = exponent;
  return g;
}

// Residuals of the chain identities, sampled on a fixed spiral.
Json invariant_residuals(np_parametrization* param) {
  double s0[8];
  check_status(np_coefficients(param, 0.0, 0.0, s0));
  double s_at_zero = std::hypot(s0[6], s0[7]);

  double worst_det = 0.0;
  double min_dominance = 1e300;
  for (int k = 1; k <= 50; ++k) {
    double r = 0.9 * k / 50.0;
    double theta = 2.399963229728653 * k;
    double z_re = r * std::cos(theta), z_im = r * std::sin(theta);
    double c[8], ratio[2];
    check_status(np_coefficients(param, z_re, z_im, c));
    std::complex<double> p{c[0], c[1]}, q{c[2], c[3]}, rr{c[4], c[5]}, s{c[6], c[7]};
    check_status(
        np_coefficient_ratio(param, NP_RATIO_PI_OVER_R2, z_re, z_im, ratio));
    std::complex<double> pi_z = std::complex<double>{ratio[0], ratio[1]} * rr * rr;
    double det_err = std::abs(p * s - q * rr - pi_z) /
                     std::max(std::abs(pi_z), 1e-12);
    worst_det = std::max(worst_det, det_err);
    double dom = std::abs(rr) - std::max({std::abs(p), std::abs(q), std::abs(s), 1.0});
    min_dominance = std::min(min_dominance, dom);
  }
  return Json{{"determinant_identity_rel", worst_det},
              {"s_at_zero", s_at_zero},
              {"dominance_margin", min_dominance}};
}

int run(int argc, char** argv) {
  CLI::App app{"Scaled interpolation problems, extremal solutions and "
               "inner-function class diagnostics"};
  app.require_subcommand(1);

  std::string config_path;

  // -- solve ----------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "Feasibility and optimal norm");
  std::string solve_file, solve_out;
  double solve_tol = 1e-9;
  solve->add_option("problem", solve_file, "problem JSON file")->required();
  auto* solve_tol_opt = solve->add_option("--tol", solve_tol, "bisection tolerance");
  auto* solve_out_opt = solve->add_option("--out", solve_out, "output path");
  solve->add_option("--config", config_path, "JSON config file");
  solve->callback([&] {
    ConfigFile config;
    config.load(config_path);
    config.fill(solve_tol_opt, "tol", solve_tol);
    config.fill(solve_out_opt, "out", solve_out);

    ProblemHandle problem;
    check_status(np_problem_parse(read_file(solve_file).c_str(), &problem.ptr));
    char* report_text = nullptr;
    check_status(np_solve(problem.ptr, solve_tol, &report_text));
    Json report = Json::parse(take_string(report_text));

    np_parametrization* raw = nullptr;
    int status = np_parametrization_build(problem.ptr, &raw);
    ParametrizationHandle param{raw};
    if (status == NP_OK) {
      report["invariants"] = invariant_residuals(param.ptr);
    } else if (status != NP_ERR_NOT_STRICTLY_SOLVABLE) {
      check_status(status);
    } else if (report.value("solvable", "") == "yes") {
      bail(kExitNotStrictlySolvable, np_last_error());
    }
    write_output(solve_out, report.dump(2));
  });

  // -- extremal ---------------------------------------------------------------
  auto* extremal = app.add_subcommand(
      "extremal", "Dump extremal values and vertevorrat data as CSV");
  std::string extremal_file, extremal_out = "extremal-out";
  int gamma_count = 16, z_count = 64;
  std::uint64_t extremal_seed = 1;
  extremal->add_option("problem", extremal_file, "problem JSON file")->required();
  auto* gc_opt = extremal->add_option("--gamma-count", gamma_count, "gamma grid size");
  extremal->add_option("--z-samples", z_count, "number of interior samples");
  auto* eseed_opt = extremal->add_option("--seed", extremal_seed, "sample seed");
  auto* eout_opt = extremal->add_option("--out", extremal_out, "output directory");
  extremal->add_option("--config", config_path, "JSON config file");
  extremal->callback([&] {
    ConfigFile config;
    config.load(config_path);
    config.fill(gc_opt, "gamma-count", gamma_count);
    config.fill(eseed_opt, "seed", extremal_seed);
    config.fill(eout_opt, "out", extremal_out);

    ProblemHandle problem;
    check_status(np_problem_parse(read_file(extremal_file).c_str(), &problem.ptr));
    ParametrizationHandle param;
    check_status(np_parametrization_build(problem.ptr, &param.ptr));
    char* files = nullptr;
    check_status(np_extremal_csv(param.ptr, extremal_out.c_str(), gamma_count,
                                 z_count, extremal_seed, &files));
    std::cout << take_string(files) << '\n';
  });

  // -- classify ---------------------------------------------------------------
  auto* classify = app.add_subcommand(
      "classify", "Membership diagnostics for a finite zero set");
  std::string zeros_file, class_name = "balpha", classify_out;
  std::string gen_kind, gen_rule = "equidistributed";
  int gen_count = 12, gen_per_annulus = 1;
  double gen_exponent = 2.0, gen_theta0 = 0.0;
  std::uint64_t gen_seed = 1;
  double class_alpha = 0.5, class_tol = 1e-4;
  bool log_weight = false;
  classify->add_option("--zeros", zeros_file, "zeros JSON file");
  classify->add_option("--generator", gen_kind, "exponential | power");
  classify->add_option("--count", gen_count, "generator size");
  classify->add_option("--per-annulus", gen_per_annulus, "zeros per annulus");
  classify->add_option("--exponent", gen_exponent, "power exponent");
  classify->add_option("--angle-rule", gen_rule, "fixed | equidistributed | random");
  classify->add_option("--theta0", gen_theta0, "fixed angle");
  auto* cseed_opt = classify->add_option("--seed", gen_seed, "generator seed");
  classify->add_option("--class", class_name,
                       "balpha | bh | exponential | hardy | weakh1 | carleson");
  auto* alpha_opt = classify->add_option("--alpha", class_alpha, "class exponent");
  classify->add_flag("--log", log_weight, "include the |log(1-|z|^2)| factor");
  auto* ctol_opt = classify->add_option("--tol", class_tol, "quadrature tolerance");
  auto* cout_opt = classify->add_option("--out", classify_out, "output path");
  classify->add_option("--config", config_path, "JSON config file");
  classify->callback([&] {
    ConfigFile config;
    config.load(config_path);
    config.fill(alpha_opt, "alpha", class_alpha);
    config.fill(ctol_opt, "tol", class_tol);
    config.fill(cseed_opt, "seed", gen_seed);
    config.fill(cout_opt, "out", classify_out);

    std::string zeros_json;
    if (!zeros_file.empty()) {
      zeros_json = read_file(zeros_file);
    } else if (!gen_kind.empty()) {
      char* generated = nullptr;
      Json spec{{"kind", "zeros"},
                {"generator", generator_spec(gen_kind, gen_count, gen_per_annulus,
                                             gen_exponent, gen_rule, gen_theta0,
                                             gen_seed)}};
      check_status(np_generate(spec.dump().c_str(), &generated));
      zeros_json = take_string(generated);
    } else {
      bail(kExitInvalidInput, "classify needs --zeros or --generator");
    }
    Json spec{{"class", class_name},
              {"alpha", class_alpha},
              {"log", log_weight},
              {"tol", class_tol}};
    char* report = nullptr;
    check_status(np_classify(zeros_json.c_str(), spec.dump().c_str(), &report));
    write_output(classify_out, take_string(report));
  });

  // -- contour ---------------------------------------------------------------
  auto* contour = app.add_subcommand(
      "contour", "Level-set contour and box-normalized length");
  std::string contour_zeros, contour_out;
  double contour_eps = 0.3;
  int contour_grid = 1 << 9, contour_levels = 8;
  contour->add_option("--zeros", contour_zeros, "zeros JSON file")->required();
  contour->add_option("--eps", contour_eps, "level in (0,1)");
  auto* grid_opt = contour->add_option("--grid", contour_grid, "grid resolution");
  contour->add_option("--levels", contour_levels, "box levels");
  auto* contour_out_opt = contour->add_option("--out", contour_out, "output path");
  contour->add_option("--config", config_path, "JSON config file");
  contour->callback([&] {
    ConfigFile config;
    config.load(config_path);
    config.fill(grid_opt, "grid", contour_grid);
    config.fill(contour_out_opt, "out", contour_out);

    char* result = nullptr;
    check_status(np_contour(read_file(contour_zeros).c_str(), contour_eps,
                            contour_grid, contour_levels, &result));
    write_output(contour_out, take_string(result));
  });

  // -- verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "Run a named check suite");
  std::string recipe, verify_out;
  std::uint64_t verify_seed = 1;
  int budget = 1;
  verify->add_option("--recipe", recipe,
                     "invariants | thm1a | thm1b | thm1c-demo | thm2-averaging "
                     "| lemmaD | lemma5 | contour")
      ->required();
  auto* vseed_opt = verify->add_option("--seed", verify_seed, "suite seed");
  auto* budget_opt = verify->add_option("--budget", budget,
                                        "0 = reduced counts, 1 = full");
  auto* vout_opt = verify->add_option("--out", verify_out, "output path");
  verify->add_option("--config", config_path, "JSON config file");
  verify->callback([&] {
    ConfigFile config;
    config.load(config_path);
    config.fill(vseed_opt, "seed", verify_seed);
    config.fill(budget_opt, "budget", budget);
    config.fill(vout_opt, "out", verify_out);

    char* report_text = nullptr;
    check_status(np_verify(recipe.c_str(), verify_seed, budget, &report_text));
    std::string text = take_string(report_text);
    write_output(verify_out, text);
    Json report = Json::parse(text);
    if (!report.value("pass", false)) {
      for (const Json& criterion : report.at("criteria"))
        for (const Json& check : criterion.at("checks"))
          if (!check.value("pass", false))
            bail(kExitCheckFailed,
                 "check failed: " + check.value("anchor", std::string{}));
      bail(kExitCheckFailed, "check failed");
    }
  });

  // -- generate -----------------------------------------------------------------
  auto* generate = app.add_subcommand(
      "generate", "Write zero sets or scaled problems");
  std::string generate_kind = "zeros", generate_out;
  std::string g2_kind = "exponential", g2_rule = "equidistributed";
  int g2_count = 12, g2_per_annulus = 1;
  double g2_exponent = 2.0, g2_theta0 = 0.0, g2_scale = 0.5;
  std::uint64_t g2_seed = 1;
  generate->add_option("kind", generate_kind, "zeros | problem")->required();
  generate->add_option("--generator", g2_kind, "exponential | power");
  generate->add_option("--count", g2_count, "generator size");
  generate->add_option("--per-annulus", g2_per_annulus, "zeros per annulus");
  generate->add_option("--exponent", g2_exponent, "power exponent");
  generate->add_option("--angle-rule", g2_rule, "fixed | equidistributed | random");
  generate->add_option("--theta0", g2_theta0, "fixed angle");
  generate->add_option("--scale", g2_scale, "target norm for problems");
  auto* g2seed_opt = generate->add_option("--seed", g2_seed, "seed");
  auto* g2out_opt = generate->add_option("--out", generate_out, "output path");
  generate->add_option("--config", config_path, "JSON config file");
  generate->callback([&] {
    ConfigFile config;
    config.load(config_path);
    config.fill(g2seed_opt, "seed", g2_seed);
    config.fill(g2out_opt, "out", generate_out);

    Json gen = generator_spec(g2_kind, g2_count, g2_per_annulus, g2_exponent,
                              g2_rule, g2_theta0, g2_seed);
    Json spec;
    if (generate_kind == "zeros") {
      spec = Json{{"kind", "zeros"}, {"generator", gen}};
    } else if (generate_kind == "problem") {
      spec = Json{{"kind", "problem"},
                  {"nodes", gen},
                  {"scale", g2_scale},
                  {"seed", g2_seed}};
    } else {
      bail(kExitInvalidInput, "kind must be zeros or problem");
    }
    char* out = nullptr;
    check_status(np_generate(spec.dump().c_str(), &out));
    write_output(generate_out, take_string(out));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}
