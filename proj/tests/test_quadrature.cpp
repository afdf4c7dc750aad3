#include <doctest.h>

#include <cmath>

#include "core/blaschke.hpp"
#include "core/quadrature.hpp"
#include "oracles.hpp"

using namespace npick;

TEST_CASE("circle integral basics") {
  auto one = [](Complex) { return 1.0; };
  CHECK(circle_integral(one, 0.5, 8).value == doctest::Approx(two_pi));

  auto cosine = [](Complex z) { return std::cos(std::arg(z)); };
  CHECK(std::abs(circle_integral(cosine, 1.0, 64).value) <= 1e-12);

  CHECK_THROWS_AS(circle_integral(one, 0.5, 12), Error);  // not a power of two
  CHECK_THROWS_AS(circle_integral(one, 0.5, 4), Error);
}

TEST_CASE("circle integral against the romberg oracle") {
  // Frozen target for int_0^{2pi} |e^{it} - 0.5|^{-1} dt, checked against an
  // independent Romberg evaluation of the same integrand.
  const double frozen = 6.7430014192503842;
  double oracle = oracles::romberg(
      [](double t) { return 1.0 / std::abs(std::polar(1.0, t) - Complex{0.5, 0.0}); },
      0.0, two_pi);
  CHECK(oracle == doctest::Approx(frozen).epsilon(1e-10));

  auto g = [](Complex z) { return 1.0 / std::abs(z - Complex{0.5, 0.0}); };
  IntegralResult result = circle_integral(g, 1.0, 64, true, 1e-10);
  CHECK(result.value == doctest::Approx(frozen).epsilon(1e-9));
}

TEST_CASE("disc integral closed forms") {
  SUBCASE("polynomial decay against the beta closed form") {
    // g = (1-|z|)^2 with weight (1-r)^{-3/2}: 2 pi * int r (1-r)^{1/2} dr
    // = 8 pi / 15.
    auto g = [](Complex z) { return std::pow(1.0 - std::abs(z), 2.0); };
    IntegralResult result =
        disc_integral(g, RadialWeight::alpha_form(0.5), 2.0, {});
    CHECK(result.value == doctest::Approx(8.0 * pi / 15.0).epsilon(1e-8));
  }

  SUBCASE("zero integrand") {
    auto g = [](Complex) { return 0.0; };
    CHECK(disc_integral(g, RadialWeight::alpha_form(0.5), 1.0, {}).value == 0.0);
  }

  SUBCASE("log kernel regression target") {
    // int over the disc of log|z|^{-1} (1-|z|)^{-3/2} dA = 2 pi (8 ln 2 - 4).
    const double closed_form = two_pi * (8.0 * std::log(2.0) - 4.0);
    double oracle = two_pi * oracles::romberg(
                                 [](double s) {
                                   double r = 1.0 - s * s;
                                   if (r <= 0.0) return 0.0;
                                   double w = std::pow(s, -3.0) * 2.0 * s;
                                   return r * std::log(1.0 / r) * w;
                                 },
                                 1e-8, 1.0);
    CHECK(oracle == doctest::Approx(closed_form).epsilon(1e-6));

    BlaschkeProduct b{ZeroSequence({Complex{0.0, 0.0}})};
    auto g = [&b](Complex z) {
      double mod = std::abs(b.value(z));
      return mod <= 0.0 ? 700.0 : std::min(700.0, -std::log(mod));
    };
    QuadratureSpec spec;
    spec.tolerance = 1e-7;
    IntegralResult result = disc_integral(g, RadialWeight::alpha_form(0.5), 1.0, spec);
    CHECK(result.value == doctest::Approx(closed_form).epsilon(1e-4));
  }
}

TEST_CASE("declared decay is checked against the weight") {
  auto g = [](Complex) { return 1.0; };
  CHECK_THROWS_AS(disc_integral(g, RadialWeight::alpha_form(0.5), 0.4, {}), Error);
  try {
    disc_integral(g, RadialWeight::alpha_form(0.5), 0.4, {});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_integrable_declaration);
  }
}

TEST_CASE("error estimates are honest on the regression target") {
  const double closed_form = two_pi * (8.0 * std::log(2.0) - 4.0);
  BlaschkeProduct b{ZeroSequence({Complex{0.0, 0.0}})};
  auto g = [&b](Complex z) {
    double mod = std::abs(b.value(z));
    return mod <= 0.0 ? 700.0 : std::min(700.0, -std::log(mod));
  };
  double previous_error = 1e300;
  for (double tol : {1e-3, 1e-4, 1e-5, 1e-6}) {
    QuadratureSpec spec;
    spec.tolerance = tol;
    IntegralResult result = disc_integral(g, RadialWeight::alpha_form(0.5), 1.0, spec);
    double actual = std::abs(result.value - closed_form);
    CHECK(actual <= previous_error + 1e-12);
    CHECK(actual <= 10.0 * std::max(result.error, tol * closed_form));
    previous_error = actual;
  }
}

TEST_CASE("disc integral is additive over radial splits") {
  BlaschkeProduct b{ZeroSequence({Complex{0.4, 0.2}})};
  auto logmod = [&b](Complex z) {
    double mod = std::abs(b.value(z));
    return mod <= 0.0 ? 700.0 : std::min(700.0, -std::log(mod));
  };
  QuadratureSpec spec;
  spec.tolerance = 1e-4;
  auto inner = [&](Complex z) { return std::abs(z) < 0.7 ? logmod(z) : 0.0; };
  auto outer = [&](Complex z) { return std::abs(z) >= 0.7 ? logmod(z) : 0.0; };
  IntegralResult whole = disc_integral(logmod, RadialWeight::alpha_form(0.5), 1.0, spec);
  IntegralResult lo = disc_integral(inner, RadialWeight::alpha_form(0.5), 1.0, spec);
  IntegralResult hi = disc_integral(outer, RadialWeight::alpha_form(0.5), 1.0, spec);
  CHECK(std::abs(whole.value - lo.value - hi.value) <=
        whole.error + lo.error + hi.error + 1e-6 * whole.value);
}

TEST_CASE("line integral with kinks") {
  auto square = [](double x) { return x * x; };
  CHECK(line_integral(square, 0.0, 1.0, 1e-12).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  auto kink = [](double x) { return std::abs(x - 1.0 / 3.0); };
  IntegralResult result = line_integral(kink, 0.0, 1.0, 1e-12, {1.0 / 3.0});
  // int |x - 1/3| dx = (1/3)^2/2 + (2/3)^2/2 = 5/18
  CHECK(result.value == doctest::Approx(5.0 / 18.0).epsilon(1e-10));
}

TEST_CASE("weight function validation") {
  CHECK_THROWS_AS(WeightFunction("bad-increasing",
                                 [](double t) { return t; },
                                 [](double) { return 1.0; },
                                 [](double) { return 0.0; }),
                  Error);
  CHECK_THROWS_AS(WeightFunction("bad-at-one",
                                 [](double) { return 0.5; },
                                 [](double) { return 0.0; },
                                 [](double) { return 0.0; }),
                  Error);
  WeightFunction h = WeightFunction::alpha_weight(0.5);
  CHECK(h(1.0) == 0.0);
  CHECK(h(0.0) == doctest::Approx(1.0));
  CHECK(h.singular_exponent() == doctest::Approx(0.5).epsilon(1e-3));
}
