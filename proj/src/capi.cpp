#include "npick/npick.h"

#include <cstring>
#include <string>

#include "core/classes.hpp"
#include "core/contour.hpp"
#include "core/errors.hpp"
#include "core/gen.hpp"
#include "core/io.hpp"
#include "core/schur.hpp"
#include "core/verify.hpp"

using namespace npick;

struct np_problem {
  PickProblem value;
};
struct np_parametrization {
  Parametrization value;
};
struct np_blaschke {
  BlaschkeProduct value;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return NP_ERR_INVALID_ARGUMENT;
    case ErrorCode::bad_input: return NP_ERR_BAD_INPUT;
    case ErrorCode::bad_params: return NP_ERR_BAD_PARAMS;
    case ErrorCode::pole_at_point: return NP_ERR_POLE_AT_POINT;
    case ErrorCode::level_out_of_range: return NP_ERR_LEVEL_OUT_OF_RANGE;
    case ErrorCode::ill_conditioned: return NP_ERR_ILL_CONDITIONED;
    case ErrorCode::not_strictly_solvable: return NP_ERR_NOT_STRICTLY_SOLVABLE;
    case ErrorCode::step_blowup: return NP_ERR_STEP_BLOWUP;
    case ErrorCode::bad_weight: return NP_ERR_BAD_WEIGHT;
    case ErrorCode::resolution_exceeded: return NP_ERR_RESOLUTION_EXCEEDED;
    case ErrorCode::quadrature_non_convergent:
      return NP_ERR_QUADRATURE_NON_CONVERGENT;
    case ErrorCode::non_integrable_declaration:
      return NP_ERR_NON_INTEGRABLE_DECLARATION;
    case ErrorCode::contour_open: return NP_ERR_CONTOUR_OPEN;
    case ErrorCode::grid_too_coarse: return NP_ERR_GRID_TOO_COARSE;
    case ErrorCode::divergence: return NP_ERR_DIVERGENCE;
    case ErrorCode::internal: return NP_ERR_INTERNAL;
  }
  return NP_ERR_INTERNAL;
}

template <class F>
int guarded(F&& body) {
  try {
    body();
    return NP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NP_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::invalid_argument, what);
}

void write_complex(Complex v, double out[2]) {
  out[0] = v.real();
  out[1] = v.imag();
}

ZeroSequence zeros_from_text(const char* zeros_json) {
  require(zeros_json != nullptr, "zeros_json must not be null");
  return zeros_from_json(parse_json(zeros_json));
}

ZeroSequence generate_from_spec(const Json& g) {
  std::string kind = g.value("kind", "");
  AngleRule rule = angle_rule_from_string(g.value("angle_rule", "fixed"));
  double theta0 = g.value("theta0", 0.0);
  std::uint64_t seed = g.value("seed", std::uint64_t{0});
  int count = g.value("count", 0);
  if (kind == "exponential")
    return ZeroSequence::exponential(g.value("per_annulus", 1), rule, count,
                                     theta0, seed);
  if (kind == "power")
    return ZeroSequence::power(g.value("exponent", 2.0), rule, count, theta0,
                               seed);
  fail(ErrorCode::bad_params, "generator kind must be exponential or power");
}

}  // namespace

extern "C" {

const char* np_status_name(int status) {
  switch (status) {
    case NP_OK: return "OK";
    case NP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case NP_ERR_BAD_INPUT: return "BadInput";
    case NP_ERR_BAD_PARAMS: return "BadParams";
    case NP_ERR_POLE_AT_POINT: return "PoleAtPoint";
    case NP_ERR_LEVEL_OUT_OF_RANGE: return "LevelOutOfRange";
    case NP_ERR_ILL_CONDITIONED: return "IllConditioned";
    case NP_ERR_NOT_STRICTLY_SOLVABLE: return "NotStrictlySolvable";
    case NP_ERR_STEP_BLOWUP: return "StepBlowup";
    case NP_ERR_BAD_WEIGHT: return "BadWeight";
    case NP_ERR_RESOLUTION_EXCEEDED: return "ResolutionExceeded";
    case NP_ERR_QUADRATURE_NON_CONVERGENT: return "QuadratureNonConvergent";
    case NP_ERR_NON_INTEGRABLE_DECLARATION: return "NonIntegrableDeclaration";
    case NP_ERR_CONTOUR_OPEN: return "ContourOpen";
    case NP_ERR_GRID_TOO_COARSE: return "GridTooCoarse";
    case NP_ERR_DIVERGENCE: return "Divergence";
    case NP_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* np_last_error(void) { return g_last_error.c_str(); }

void np_free_string(char* s) { delete[] s; }

int np_problem_parse(const char* json, np_problem** out) {
  return guarded([&] {
    require(json && out, "json and out must not be null");
    auto parsed = problem_from_json(parse_json(json));
    *out = new np_problem{std::move(parsed)};
  });
}

void np_problem_free(np_problem* p) { delete p; }

int np_problem_size(const np_problem* p, int* out) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    *out = static_cast<int>(p->value.size());
  });
}

int np_solve(const np_problem* p, double tol, char** report_json) {
  return guarded([&] {
    require(p && report_json, "handle and out must not be null");
    FeasibilityReport report = scaled_report(p->value, tol);
    *report_json = copy_string(feasibility_to_json(report).dump(2));
  });
}

int np_parametrization_build(const np_problem* p, np_parametrization** out) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    *out = new np_parametrization{Parametrization::build(p->value)};
  });
}

void np_parametrization_free(np_parametrization* p) { delete p; }

int np_coefficients(const np_parametrization* p, double z_re, double z_im,
                    double out_pqrs[8]) {
  return guarded([&] {
    require(p && out_pqrs, "handle and out must not be null");
    NevanlinnaCoefficients c = p->value.coefficients_at({z_re, z_im});
    write_complex(c.p, out_pqrs);
    write_complex(c.q, out_pqrs + 2);
    write_complex(c.r, out_pqrs + 4);
    write_complex(c.s, out_pqrs + 6);
  });
}

int np_coefficients_jet(const np_parametrization* p, double z_re, double z_im,
                        double out_jet[16]) {
  return guarded([&] {
    require(p && out_jet, "handle and out must not be null");
    NevanlinnaJet j = p->value.jet_at({z_re, z_im});
    write_complex(j.p, out_jet);
    write_complex(j.q, out_jet + 2);
    write_complex(j.r, out_jet + 4);
    write_complex(j.s, out_jet + 6);
    write_complex(j.dp, out_jet + 8);
    write_complex(j.dq, out_jet + 10);
    write_complex(j.dr, out_jet + 12);
    write_complex(j.ds, out_jet + 14);
  });
}

int np_extremal(const np_parametrization* p, double gamma, double z_re,
                double z_im, double out[2]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    write_complex(p->value.extremal(gamma, {z_re, z_im}), out);
  });
}

int np_extremal_derivative(const np_parametrization* p, double gamma,
                           double z_re, double z_im, double out[2]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    write_complex(p->value.extremal_derivative(gamma, {z_re, z_im}), out);
  });
}

int np_solve_with_constant(const np_parametrization* p, double w_re,
                           double w_im, double z_re, double z_im,
                           double out[2]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    write_complex(p->value.solve_with_constant({w_re, w_im}, {z_re, z_im}), out);
  });
}

int np_vertevorrat(const np_parametrization* p, double z_re, double z_im,
                   double out[3]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    Vertevorrat v = p->value.vertevorrat({z_re, z_im});
    out[0] = v.center.real();
    out[1] = v.center.imag();
    out[2] = v.radius;
  });
}

int np_coefficient_ratio(const np_parametrization* p, int which, double z_re,
                         double z_im, double out[2]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    require(which >= 0 && which <= 4, "ratio selector out of range");
    write_complex(p->value.coefficient_ratio(
                      static_cast<CoefficientRatio>(which), {z_re, z_im}),
                  out);
  });
}

int np_average_extremal(const np_parametrization* p, double z_re, double z_im,
                        int gamma_count, double out[2]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    write_complex(p->value.average_extremal({z_re, z_im}, gamma_count), out);
  });
}

int np_average_tilde(const np_parametrization* p, double z_re, double z_im,
                     double delta, int variant, int gamma_count,
                     double out[2]) {
  return guarded([&] {
    require(p && out, "handle and out must not be null");
    require(variant == 0 || variant == 1, "variant selector out of range");
    write_complex(
        p->value.average_tilde({z_re, z_im}, delta,
                               static_cast<TildeVariant>(variant), gamma_count),
        out);
  });
}

int np_extremal_csv(const np_parametrization* p, const char* directory,
                    int gamma_count, int z_count, uint64_t seed,
                    char** files_json) {
  return guarded([&] {
    require(p && directory && files_json, "handle, directory, out required");
    require(gamma_count >= 1 && z_count >= 1, "counts must be positive");
    ExtremalDumpPaths paths =
        write_extremal_csv(p->value, directory, gamma_count, z_count, seed);
    Json j{{"values", paths.values},
           {"boundary", paths.boundary},
           {"vertevorrat", paths.vertevorrat}};
    *files_json = copy_string(j.dump(2));
  });
}

int np_blaschke_parse(const char* zeros_json, np_blaschke** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    *out = new np_blaschke{BlaschkeProduct{zeros_from_text(zeros_json)}};
  });
}

int np_blaschke_generate(const char* generator_json, np_blaschke** out) {
  return guarded([&] {
    require(generator_json && out, "spec and out must not be null");
    Json g = parse_json(generator_json);
    *out = new np_blaschke{BlaschkeProduct{generate_from_spec(g)}};
  });
}

void np_blaschke_free(np_blaschke* b) { delete b; }

int np_blaschke_size(const np_blaschke* b, int* out) {
  return guarded([&] {
    require(b && out, "handle and out must not be null");
    *out = static_cast<int>(b->value.degree());
  });
}

int np_blaschke_zeros_json(const np_blaschke* b, char** json) {
  return guarded([&] {
    require(b && json, "handle and out must not be null");
    *json = copy_string(zeros_to_json(b->value.zero_sequence()).dump(2));
  });
}

int np_blaschke_eval(const np_blaschke* b, double z_re, double z_im,
                     double out[2]) {
  return guarded([&] {
    require(b && out, "handle and out must not be null");
    write_complex(b->value.value({z_re, z_im}), out);
  });
}

int np_blaschke_derivative(const np_blaschke* b, double z_re, double z_im,
                           double out[2]) {
  return guarded([&] {
    require(b && out, "handle and out must not be null");
    write_complex(b->value.derivative({z_re, z_im}), out);
  });
}

int np_blaschke_angular_derivative(const np_blaschke* b, double theta,
                                   double* out) {
  return guarded([&] {
    require(b && out, "handle and out must not be null");
    *out = b->value.angular_derivative_modulus(theta);
  });
}

int np_classify(const char* zeros_json, const char* spec_json,
                char** report_json) {
  return guarded([&] {
    require(zeros_json && spec_json && report_json,
            "zeros, spec and out must not be null");
    ZeroSequence zeros = zeros_from_text(zeros_json);
    Json spec = parse_json(spec_json);
    std::string cls = spec.value("class", "");
    Json out;
    if (cls == "balpha") {
      double alpha = spec.value("alpha", 0.5);
      ClassReport report = weighted_zero_sum(
          zeros, WeightFunction::alpha_weight(alpha), spec.value("log", false));
      report.class_name = "balpha";
      report.alpha = alpha;
      out = class_report_to_json(report);
    } else if (cls == "bh") {
      double walpha = spec.value("weight_alpha", 0.5);
      ClassReport report = weighted_zero_sum(
          zeros, WeightFunction::alpha_weight(walpha), spec.value("log", false));
      report.class_name = "bh";
      out = class_report_to_json(report);
    } else if (cls == "exponential") {
      AnnulusCounts counts = exponential_bound(zeros);
      out = Json{{"class", "exponential"},
                 {"bound", counts.bound},
                 {"per_annulus", counts.per_annulus}};
    } else if (cls == "hardy") {
      BlaschkeProduct b{zeros};
      ClassReport report =
          hardy_derivative_norm(b, spec.value("alpha", 0.5));
      out = class_report_to_json(report);
    } else if (cls == "weakh1") {
      BlaschkeProduct b{zeros};
      ClassReport report = weak_h1_diagnostic(b);
      out = class_report_to_json(report);
    } else if (cls == "carleson") {
      BlaschkeProduct b{zeros};
      ClassReport report = carleson_integral_alpha(
          b, spec.value("alpha", 0.5), spec.value("log", false),
          spec.value("tol", 1e-4));
      out = class_report_to_json(report);
    } else {
      fail(ErrorCode::bad_params, "unknown class: " + cls);
    }
    *report_json = copy_string(out.dump(2));
  });
}

int np_contour(const char* zeros_json, double eps, int resolution,
               int carleson_levels, char** result_json) {
  return guarded([&] {
    require(zeros_json && result_json, "zeros and out must not be null");
    BlaschkeProduct b{zeros_from_text(zeros_json)};
    ContourEstimate contour = level_contour(b, eps, resolution);
    if (carleson_levels >= 0) {
      CarlesonNormEstimate norm = carleson_norm(contour, carleson_levels);
      *result_json = copy_string(contour_to_json(contour, &norm).dump(2));
    } else {
      *result_json = copy_string(contour_to_json(contour).dump(2));
    }
  });
}

int np_generate(const char* spec_json, char** out_json) {
  return guarded([&] {
    require(spec_json && out_json, "spec and out must not be null");
    Json spec = parse_json(spec_json);
    std::string kind = spec.value("kind", "");
    if (kind == "zeros") {
      ZeroSequence zeros = generate_from_spec(spec.at("generator"));
      *out_json = copy_string(zeros_to_json(zeros).dump(2));
    } else if (kind == "problem") {
      ZeroSequence nodes = generate_from_spec(spec.at("nodes"));
      double scale = spec.value("scale", 0.5);
      std::uint64_t seed = spec.value("seed", std::uint64_t{0});
      Rng rng(seed);
      PickProblem problem =
          scaled_problem_on_nodes(rng, nodes.zeros(), scale);
      Json j = problem_to_json(problem);
      j["scale"] = scale;
      j["seed"] = seed;
      *out_json = copy_string(j.dump(2));
    } else {
      fail(ErrorCode::bad_params, "kind must be zeros or problem");
    }
  });
}

int np_verify(const char* recipe, uint64_t seed, int budget,
              char** run_report_json) {
  return guarded([&] {
    require(recipe && run_report_json, "recipe and out must not be null");
    RunReport report = run_recipe(recipe, seed, budget);
    *run_report_json = copy_string(run_report_to_json(report).dump(2));
  });
}

}  // extern "C"
