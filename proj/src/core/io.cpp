#include "io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"

namespace npick {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::bad_input, "expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json problem_to_json(const PickProblem& p) {
  Json nodes = Json::array(), targets = Json::array();
  for (const Complex& z : p.nodes) nodes.push_back(complex_to_json(z));
  for (const Complex& w : p.targets) targets.push_back(complex_to_json(w));
  return Json{{"nodes", nodes}, {"targets", targets}};
}

PickProblem problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("targets"))
    fail(ErrorCode::bad_input, "problem needs 'nodes' and 'targets' arrays");
  std::vector<Complex> nodes, targets;
  for (const Json& item : j.at("nodes")) nodes.push_back(complex_from_json(item));
  for (const Json& item : j.at("targets")) targets.push_back(complex_from_json(item));
  return PickProblem::create(std::move(nodes), std::move(targets));
}

Json zeros_to_json(const ZeroSequence& seq) {
  Json zs = Json::array();
  for (const Complex& z : seq.zeros()) zs.push_back(complex_to_json(z));
  Json out{{"zeros", zs}};
  if (seq.generator()) {
    const GeneratorInfo& info = *seq.generator();
    Json gen{{"kind", info.kind}};
    if (info.kind == "exponential") gen["per_annulus"] = info.per_annulus;
    if (info.kind == "power") gen["exponent"] = info.exponent;
    gen["angle_rule"] = to_string(info.angle_rule);
    gen["theta0"] = info.theta0;
    gen["seed"] = info.seed;
    gen["count"] = info.count;
    if (!info.clipped.empty()) gen["clipped"] = info.clipped;
    if (!info.warnings.empty()) gen["warnings"] = info.warnings;
    out["generator"] = gen;
  }
  return out;
}

ZeroSequence zeros_from_json(const Json& j) {
  const Json* zs = nullptr;
  if (j.is_array()) {
    zs = &j;
  } else if (j.is_object() && j.contains("zeros")) {
    zs = &j.at("zeros");
  } else {
    fail(ErrorCode::bad_input, "expected a zeros array or an object with 'zeros'");
  }
  std::vector<Complex> zeros;
  for (const Json& item : *zs) zeros.push_back(complex_from_json(item));
  std::optional<GeneratorInfo> info;
  if (j.is_object() && j.contains("generator")) {
    const Json& g = j.at("generator");
    GeneratorInfo gi;
    gi.kind = g.value("kind", "custom");
    gi.per_annulus = g.value("per_annulus", 0);
    gi.exponent = g.value("exponent", 0.0);
    gi.angle_rule = angle_rule_from_string(g.value("angle_rule", "fixed"));
    gi.theta0 = g.value("theta0", 0.0);
    gi.seed = g.value("seed", std::uint64_t{0});
    gi.count = g.value("count", 0);
    if (g.contains("clipped")) gi.clipped = g.at("clipped").get<std::vector<int>>();
    if (g.contains("warnings"))
      gi.warnings = g.at("warnings").get<std::vector<std::string>>();
    info = std::move(gi);
  }
  return ZeroSequence(std::move(zeros), std::move(info));
}

Json feasibility_to_json(const FeasibilityReport& report) {
  return Json{{"solvable", to_string(report.solvable)},
              {"min_eig", report.min_eig},
              {"optimal_norm", report.optimal_norm},
              {"scaled", report.scaled},
              {"margin", report.margin}};
}

Json class_report_to_json(const ClassReport& report) {
  Json params{{"log_weight", report.log_weight},
              {"truncation", report.truncation},
              {"tolerance", report.tolerance}};
  if (!std::isnan(report.alpha)) params["alpha"] = report.alpha;
  if (!report.weight_name.empty()) params["weight"] = report.weight_name;
  Json partials = Json::array();
  for (const PartialValue& p : report.partials)
    partials.push_back(Json::array({p.n, p.value}));
  return Json{{"class", report.class_name},
              {"params", params},
              {"partials", partials},
              {"verdict", to_string(report.verdict)},
              {"fit", Json{{"exponent", report.fit.exponent}, {"r2", report.fit.r2}}},
              {"error_estimate", report.error_estimate}};
}

Json contour_to_json(const ContourEstimate& contour,
                     const CarlesonNormEstimate* norm) {
  Json lines = Json::array();
  for (const auto& line : contour.polylines) {
    Json pts = Json::array();
    for (const Complex& p : line) pts.push_back(complex_to_json(p));
    lines.push_back(pts);
  }
  Json out{{"eps", contour.eps},
           {"resolution", contour.resolution},
           {"polylines", lines},
           {"total_length", contour.total_length},
           {"min_modulus_inside", contour.min_modulus_inside},
           {"max_modulus_inside", contour.max_modulus_inside}};
  if (norm) {
    out["carleson_norm"] = Json{{"value", norm->value},
                                {"per_level", norm->per_level},
                                {"cumulative", norm->cumulative}};
  }
  return out;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::bad_input, "malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::bad_input, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::bad_input, "cannot write file: " + path);
  out << content;
}

std::string format_double(double x) {
  char buffer[40];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

ExtremalDumpPaths write_extremal_csv(const Parametrization& param,
                                     const std::string& directory,
                                     int gamma_count, int z_count,
                                     std::uint64_t seed, int boundary_count) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  ExtremalDumpPaths paths{
      (fs::path(directory) / "values.csv").string(),
      (fs::path(directory) / "boundary.csv").string(),
      (fs::path(directory) / "vertevorrat.csv").string()};

  Rng rng(seed);
  std::vector<Complex> samples(z_count);
  for (Complex& z : samples) z = rng.in_disc(0.95);

  std::ostringstream values;
  values << "z_re,z_im,gamma,value_re,value_im,on_circle_residual\n";
  std::ostringstream vertevorrat;
  vertevorrat << "z_re,z_im,c_re,c_im,rho\n";
  for (const Complex& z : samples) {
    Vertevorrat disc = param.vertevorrat(z);
    vertevorrat << format_double(z.real()) << ',' << format_double(z.imag())
                << ',' << format_double(disc.center.real()) << ','
                << format_double(disc.center.imag()) << ','
                << format_double(disc.radius) << '\n';
    for (int k = 0; k < gamma_count; ++k) {
      double gamma = two_pi * k / gamma_count;
      Complex v = param.extremal(gamma, z);
      double residual = std::abs(std::abs(v - disc.center) - disc.radius);
      values << format_double(z.real()) << ',' << format_double(z.imag()) << ','
             << format_double(gamma) << ',' << format_double(v.real()) << ','
             << format_double(v.imag()) << ',' << format_double(residual)
             << '\n';
    }
  }

  std::ostringstream boundary;
  boundary << "theta,gamma,value_re,value_im,boundary_modulus\n";
  for (int i = 0; i < boundary_count; ++i) {
    double theta = two_pi * i / boundary_count;
    Complex z = std::polar(1.0, theta);
    for (int k = 0; k < gamma_count; ++k) {
      double gamma = two_pi * k / gamma_count;
      Complex v = param.extremal(gamma, z);
      boundary << format_double(theta) << ',' << format_double(gamma) << ','
               << format_double(v.real()) << ',' << format_double(v.imag())
               << ',' << format_double(std::abs(v)) << '\n';
    }
  }

  write_file(paths.values, values.str());
  write_file(paths.boundary, boundary.str());
  write_file(paths.vertevorrat, vertevorrat.str());
  return paths;
}

}  // namespace npick
