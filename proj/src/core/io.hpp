#pragma once

#include <string>

#include <json.hpp>

#include "blaschke.hpp"
#include "contour.hpp"
#include "pick.hpp"
#include "schur.hpp"
#include "trend.hpp"

namespace npick {

// Field names are fixed by docs/schemas.md; all emitters must round-trip
// doubles exactly and stay byte-stable for identical inputs.
using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json problem_to_json(const PickProblem& p);
PickProblem problem_from_json(const Json& j);

Json zeros_to_json(const ZeroSequence& seq);
ZeroSequence zeros_from_json(const Json& j);

Json feasibility_to_json(const FeasibilityReport& report);
Json class_report_to_json(const ClassReport& report);
Json contour_to_json(const ContourEstimate& contour,
                     const CarlesonNormEstimate* norm = nullptr);

Json parse_json(const std::string& text);  // BadInput on malformed text
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string format_double(double x);  // shortest round-trip representation

// CSV dumps for the extremal sweep: values.csv has header
// z_re,z_im,gamma,value_re,value_im,on_circle_residual; boundary.csv has
// theta,gamma,value_re,value_im,boundary_modulus; vertevorrat.csv has
// z_re,z_im,c_re,c_im,rho.
struct ExtremalDumpPaths {
  std::string values;
  std::string boundary;
  std::string vertevorrat;
};
ExtremalDumpPaths write_extremal_csv(const Parametrization& param,
                                     const std::string& directory,
                                     int gamma_count, int z_count,
                                     std::uint64_t seed,
                                     int boundary_count = 256);

}  // namespace npick
