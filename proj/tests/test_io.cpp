#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "core/gen.hpp"
#include "core/io.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

using namespace npick;

TEST_CASE("problem json round trip") {
  Json j = parse_json(R"({"nodes": [[0,0],[0.5,0]], "targets": [[0,0],[0.25,0]]})");
  PickProblem p = problem_from_json(j);
  REQUIRE(p.size() == 2);
  CHECK(p.nodes[1] == Complex{0.5, 0.0});
  CHECK(p.targets[1] == Complex{0.25, 0.0});
  Json back = problem_to_json(p);
  CHECK(problem_from_json(back).nodes == p.nodes);
}

TEST_CASE("malformed input is rejected with BadInput") {
  CHECK_THROWS_AS(parse_json("{not json"), Error);
  try {
    parse_json("{not json");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_input);
  }
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"nodes": []})")), Error);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"nodes": [[0,0]], "targets": [[0]]})")),
                  Error);
}

TEST_CASE("zeros json forms") {
  ZeroSequence bare = zeros_from_json(parse_json(R"([[0.1,0.2],[0.3,0]])"));
  CHECK(bare.size() == 2);
  CHECK_FALSE(bare.generator().has_value());

  ZeroSequence seq = ZeroSequence::exponential(2, AngleRule::random, 5, 0.0, 77);
  Json j = zeros_to_json(seq);
  CHECK(j.at("generator").at("kind") == "exponential");
  CHECK(j.at("generator").at("seed") == 77);
  ZeroSequence back = zeros_from_json(j);
  CHECK(back.size() == seq.size());
  REQUIRE(back.generator().has_value());
  CHECK(back.generator()->per_annulus == 2);
  for (std::size_t i = 0; i < seq.size(); ++i)
    CHECK(std::abs(back.zeros()[i] - seq.zeros()[i]) == 0.0);
}

TEST_CASE("report field names are fixed") {
  FeasibilityReport report{Solvability::yes, 0.25, 0.5, true, 0.5};
  Json j = feasibility_to_json(report);
  CHECK(j.at("solvable") == "yes");
  CHECK(j.at("min_eig") == 0.25);
  CHECK(j.at("optimal_norm") == 0.5);
  CHECK(j.at("scaled") == true);
  CHECK(j.at("margin") == 0.5);

  ClassReport cr;
  cr.class_name = "balpha";
  cr.alpha = 0.5;
  cr.partials = {{1.0, 2.0}};
  cr.fit = {0.1, 0.95};
  cr.verdict = Verdict::finite;
  Json cj = class_report_to_json(cr);
  CHECK(cj.contains("class"));
  CHECK(cj.contains("params"));
  CHECK(cj.contains("partials"));
  CHECK(cj.at("verdict") == "finite");
  CHECK(cj.at("fit").at("exponent") == 0.1);
  CHECK(cj.at("fit").at("r2") == 0.95);
  CHECK(cj.contains("error_estimate"));
}

TEST_CASE("extremal csv dumps are deterministic") {
  namespace fs = std::filesystem;
  Rng rng(71);
  PickProblem problem = scaled_problem(rng, 4, 0.5);
  Parametrization param = Parametrization::build(problem);

  fs::path dir1 = fs::temp_directory_path() / "npick_io_test_a";
  fs::path dir2 = fs::temp_directory_path() / "npick_io_test_b";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  ExtremalDumpPaths a = write_extremal_csv(param, dir1.string(), 8, 16, 99);
  ExtremalDumpPaths b = write_extremal_csv(param, dir2.string(), 8, 16, 99);

  CHECK(read_file(a.values) == read_file(b.values));
  CHECK(read_file(a.boundary) == read_file(b.boundary));
  CHECK(read_file(a.vertevorrat) == read_file(b.vertevorrat));

  std::string header = read_file(a.values).substr(0, 54);
  CHECK(header.rfind("z_re,z_im,gamma,value_re,value_im,on_circle_residual", 0) == 0);
  CHECK(read_file(a.vertevorrat).rfind("z_re,z_im,c_re,c_im,rho", 0) == 0);
  CHECK(read_file(a.boundary).rfind("theta,gamma,value_re,value_im,boundary_modulus", 0) ==
        0);
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("run report json carries anchors and tolerances") {
  RunReport report = run_recipe("thm2-averaging", 3, 0);
  Json j = run_report_to_json(report);
  CHECK(j.at("recipe") == "thm2-averaging");
  CHECK(j.at("criteria").size() == 1);
  for (const Json& criterion : j.at("criteria")) {
    for (const Json& check : criterion.at("checks")) {
      CHECK(check.contains("anchor"));
      CHECK_FALSE(check.at("anchor").get<std::string>().empty());
      CHECK(check.contains("measured"));
      CHECK(check.contains("tolerance"));
    }
  }
  CHECK(recipe_names().size() == 8);
  CHECK_THROWS_AS(run_recipe("nonsense", 1, 0), Error);
}
