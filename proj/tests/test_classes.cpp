#include <doctest.h>

#include <cmath>

#include "core/classes.hpp"
#include "core/rng.hpp"
#include "core/trend.hpp"
#include "oracles.hpp"

using namespace npick;

namespace {

BlaschkeProduct product(std::vector<Complex> zeros) {
  return BlaschkeProduct{ZeroSequence(std::move(zeros))};
}

Verdict raw_sum_verdict(const std::vector<double>& terms) {
  std::vector<PartialValue> partials;
  double running = 0.0;
  std::size_t next = 1;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    running += terms[n];
    if (n + 1 == next || n + 1 == terms.size()) {
      partials.push_back({static_cast<double>(n + 1), running});
      next *= 2;
    }
  }
  GrowthFit fit;
  double tail = 0.0;
  return classify_trend(partials, {}, &fit, &tail);
}

}  // namespace

TEST_CASE("weighted zero sum verdicts") {
  WeightFunction h = WeightFunction::alpha_weight(0.5);

  SUBCASE("geometric generator is finite") {
    ZeroSequence seq = ZeroSequence::exponential(1, AngleRule::fixed, 20);
    ClassReport report = weighted_zero_sum(seq, h, false);
    CHECK(report.verdict == Verdict::finite);
    // Brute-force the partial sums independently.
    double total = 0.0;
    for (const Complex& z : seq.zeros()) total += h(std::norm(z));
    CHECK(report.partials.back().value == doctest::Approx(total));
  }

  SUBCASE("slow power truncation is divergent") {
    ZeroSequence seq = ZeroSequence::power(1.9, AngleRule::fixed, 10000);
    CHECK(weighted_zero_sum(seq, h, false).verdict == Verdict::divergent);
  }

  SUBCASE("fast power truncation is finite") {
    ZeroSequence seq = ZeroSequence::power(3.0, AngleRule::fixed, 10000);
    CHECK(weighted_zero_sum(seq, h, false).verdict == Verdict::finite);
  }

  SUBCASE("single zero is a complete sum") {
    ZeroSequence seq{{Complex{0.0, 0.0}}};
    ClassReport report = weighted_zero_sum(seq, h, false);
    CHECK(report.verdict == Verdict::finite);
    CHECK(report.partials.back().value == doctest::Approx(1.0));
    CHECK(report.error_estimate == 0.0);
  }

  SUBCASE("log factor keeps the verdicts") {
    ZeroSequence fast = ZeroSequence::power(3.0, AngleRule::fixed, 10000);
    CHECK(weighted_zero_sum(fast, h, true).verdict == Verdict::finite);
    ZeroSequence slow = ZeroSequence::power(1.9, AngleRule::fixed, 10000);
    CHECK(weighted_zero_sum(slow, h, true).verdict == Verdict::divergent);
  }
}

TEST_CASE("verdicts are invariant under the 1-|z| vs 1-|z|^2 swap") {
  for (double p : {3.0, 1.9}) {
    ZeroSequence seq = ZeroSequence::power(p, AngleRule::fixed, 10000);
    std::vector<double> gap_terms, gap2_terms;
    for (const Complex& z : seq.zeros()) {
      gap_terms.push_back(std::pow(1.0 - std::abs(z), 0.5));
      gap2_terms.push_back(std::pow(1.0 - std::norm(z), 0.5));
    }
    CHECK(raw_sum_verdict(gap_terms) == raw_sum_verdict(gap2_terms));
  }
}

TEST_CASE("zero sums are additive over disjoint unions") {
  WeightFunction h = WeightFunction::alpha_weight(0.5);
  ZeroSequence a = ZeroSequence::exponential(1, AngleRule::fixed, 8);
  ZeroSequence b = ZeroSequence::power(2.0, AngleRule::equidistributed, 8);
  std::vector<Complex> both = a.zeros();
  both.insert(both.end(), b.zeros().begin(), b.zeros().end());
  double sum_a = weighted_zero_sum(a, h, false).partials.back().value;
  double sum_b = weighted_zero_sum(b, h, false).partials.back().value;
  double sum_ab =
      weighted_zero_sum(ZeroSequence(both), h, false).partials.back().value;
  CHECK(sum_ab == doctest::Approx(sum_a + sum_b).epsilon(1e-12));
}

TEST_CASE("per-annulus counts") {
  CHECK(exponential_bound(ZeroSequence::exponential(1, AngleRule::fixed, 12)).bound == 1);
  CHECK(exponential_bound(ZeroSequence::exponential(3, AngleRule::random, 8)).bound == 3);

  SUBCASE("power truncations have a growing bound") {
    int small = exponential_bound(ZeroSequence::power(2.0, AngleRule::fixed, 10)).bound;
    int large = exponential_bound(ZeroSequence::power(2.0, AngleRule::fixed, 1000)).bound;
    CHECK(large > small);
  }

  SUBCASE("rotation invariance") {
    ZeroSequence seq = ZeroSequence::power(2.0, AngleRule::random, 50, 0.0, 9);
    AnnulusCounts before = exponential_bound(seq);
    AnnulusCounts after = exponential_bound(seq.rotated(1.234));
    CHECK(before.bound == after.bound);
    CHECK(before.per_annulus == after.per_annulus);
  }
}

TEST_CASE("hardy derivative norm") {
  SUBCASE("identity factor has constant averages") {
    BlaschkeProduct b = product({{0.0, 0.0}});
    ClassReport report = hardy_derivative_norm(b, 0.5, {1, 8});
    CHECK(report.verdict == Verdict::finite);
    for (const PartialValue& p : report.partials)
      CHECK(p.value == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("finite product matches the boundary quadrature") {
    Rng rng(61);
    std::vector<Complex> zeros;
    for (int k = 0; k < 4; ++k) zeros.push_back(std::polar(rng.uniform(0.3, 0.7), rng.angle()));
    BlaschkeProduct b = product(std::move(zeros));
    ClassReport report = hardy_derivative_norm(b, 0.5, {1, 14}, 1e-5);
    double boundary =
        circle_integral(
            [&b](Complex z) {
              return std::sqrt(b.angular_derivative_modulus(std::arg(z)));
            },
            1.0, 512, true, 1e-8)
            .value /
        two_pi;
    CHECK(report.partials.back().value == doctest::Approx(boundary).epsilon(1e-3));
    CHECK(report.verdict == Verdict::finite);
  }

  SUBCASE("averages rise then saturate for a deep zero") {
    BlaschkeProduct b = product({{1.0 - 0x1.0p-10, 0.0}});
    ClassReport report = hardy_derivative_norm(b, 0.5, {1, 14}, 1e-5);
    const auto& p = report.partials;
    REQUIRE(p.size() >= 12);
    CHECK(p[5].value > 2.0 * p[0].value);            // rises
    CHECK(p.back().value ==
          doctest::Approx(p[p.size() - 2].value).epsilon(1e-2));  // saturates
  }
}

TEST_CASE("weak type diagnostic") {
  SUBCASE("identity factor gives sup 2 pi exactly") {
    BlaschkeProduct b = product({{0.0, 0.0}});
    ClassReport report = weak_h1_diagnostic(b, {}, {}, 1 << 8);
    CHECK(report.verdict == Verdict::finite);
    CHECK(report.fit.exponent == doctest::Approx(two_pi));
    CHECK(report.error_estimate == 0.0);
  }

  SUBCASE("geometric zeros stay bounded, power zeros grow") {
    ConeSpec cheap;
    cheap.radial_samples = 16;
    cheap.angular_samples = 5;
    auto sup_for = [&cheap](const BlaschkeProduct& b) {
      return weak_h1_diagnostic(b, {}, cheap, 1 << 9).fit.exponent;
    };
    double exp_small = sup_for(product(
        ZeroSequence::exponential(1, AngleRule::equidistributed, 6).zeros()));
    double exp_large = sup_for(product(
        ZeroSequence::exponential(1, AngleRule::equidistributed, 12).zeros()));
    CHECK(exp_large <= 2.5 * exp_small);

    double pow_small = sup_for(product(
        ZeroSequence::power(2.0, AngleRule::equidistributed, 100).zeros()));
    double pow_large = sup_for(product(
        ZeroSequence::power(2.0, AngleRule::equidistributed, 400).zeros()));
    CHECK(pow_large >= 1.3 * pow_small);
  }

  SUBCASE("verdicts are aperture robust") {
    BlaschkeProduct b = product(
        ZeroSequence::exponential(1, AngleRule::equidistributed, 8).zeros());
    ConeSpec narrow;
    narrow.vertex_angle = pi / 6;
    ConeSpec wide;
    wide.vertex_angle = pi / 3;
    Verdict narrow_verdict = weak_h1_diagnostic(b, {}, narrow, 1 << 9).verdict;
    Verdict wide_verdict = weak_h1_diagnostic(b, {}, wide, 1 << 9).verdict;
    CHECK(narrow_verdict == wide_verdict);
  }
}

TEST_CASE("area integral of the log modulus") {
  SUBCASE("identity factor regression") {
    BlaschkeProduct b = product({{0.0, 0.0}});
    ClassReport report = carleson_integral_alpha(b, 0.5, false, 1e-6);
    CHECK(report.partials[0].value ==
          doctest::Approx(two_pi * (8.0 * std::log(2.0) - 4.0)).epsilon(1e-4));
  }

  SUBCASE("integral grows as the zero approaches the circle") {
    QuadratureSpec spec;
    spec.max_angular_nodes = 1 << 15;
    double near = carleson_integral_alpha(product({{0.9, 0.0}}), 0.5, false, 1e-4, spec)
                      .partials[0].value;
    double nearer = carleson_integral_alpha(product({{0.99, 0.0}}), 0.5, false, 1e-4, spec)
                        .partials[0].value;
    CHECK(nearer > near);
    // Lemma scaling: the ratio follows (1 - |z0|)^{-1/2} within a factor 4.
    double predicted = std::sqrt(0.1 / 0.01);
    CHECK(nearer / near >= predicted / 4.0);
    CHECK(nearer / near <= predicted * 4.0);
  }

  SUBCASE("additive under disjoint union of zero sets") {
    QuadratureSpec spec;
    spec.tolerance = 1e-5;
    double a = carleson_integral_alpha(product({{0.5, 0.0}}), 0.5, false, 1e-5, spec)
                   .partials[0].value;
    double b = carleson_integral_alpha(product({{-0.2, 0.4}}), 0.5, false, 1e-5, spec)
                   .partials[0].value;
    ClassReport joint = carleson_integral_alpha(
        product({{0.5, 0.0}, {-0.2, 0.4}}), 0.5, false, 1e-5, spec);
    CHECK(joint.partials[0].value == doctest::Approx(a + b).epsilon(1e-4));
  }

  SUBCASE("flat stretch of the weight contributes nothing") {
    // Linear below t = c (so h'' = 0 there), alpha tail above.
    double c = 0.25, alpha = 0.5;
    WeightFunction h_alpha = WeightFunction::alpha_weight(alpha);
    double slope = -0.5 * std::pow(1.0 - c, -0.5);
    double offset = std::pow(1.0 - c, 0.5) - slope * c;
    WeightFunction flat(
        "flat-then-alpha",
        [=](double t) {
          return t < c ? (offset + slope * t) / offset
                       : std::pow(1.0 - t, 0.5) / offset;
        },
        [=](double t) {
          return (t < c ? slope : -0.5 * std::pow(1.0 - t, -0.5)) / offset;
        },
        [=](double t) {
          return (t < c ? 0.0 : -0.25 * std::pow(1.0 - t, -1.5)) / offset;
        });
    BlaschkeProduct b = product({{0.3, 0.3}});
    ClassReport whole = carleson_integral(b, flat, false, 1e-5);
    // Restricting the integrand to r^2 >= c changes nothing.
    auto masked = [&b, c](Complex z) {
      if (std::norm(z) < c) return 0.0;
      double mod = std::abs(b.value(z));
      return mod <= 0.0 ? 700.0 : std::min(700.0, -std::log(mod));
    };
    QuadratureSpec spec;
    spec.tolerance = 1e-5;
    IntegralResult restricted =
        disc_integral(masked, RadialWeight::weight_form(flat), 1.0, spec);
    CHECK(whole.partials[0].value ==
          doctest::Approx(restricted.value).epsilon(1e-3));
  }
}

TEST_CASE("green identity") {
  SUBCASE("laplacian matches central differences") {
    GreenCheck check = green_identity_check(product({{0.5, 0.0}}), 0.5, 1e-5);
    CHECK(check.fd_max_rel_error <= 1e-3);
    CHECK(check.identity_rel_residual <= 1e-4);
  }

  SUBCASE("alpha sweep keeps the identity") {
    for (double alpha : {0.3, 0.5, 0.75}) {
      GreenCheck check =
          green_identity_check(product({{0.4, 0.3}, {-0.5, 0.1}}), alpha, 1e-6);
      CHECK(check.identity_rel_residual <= 1e-4);
    }
  }

  SUBCASE("duplicating a zero doubles both sides") {
    GreenCheck once = green_identity_check(product({{0.6, 0.1}}), 0.5, 1e-7);
    GreenCheck twice =
        green_identity_check(product({{0.6, 0.1}, {0.6, 0.1}}), 0.5, 1e-7);
    CHECK(twice.sum_side == doctest::Approx(2.0 * once.sum_side).epsilon(1e-9));
    CHECK(twice.term_log == doctest::Approx(2.0 * once.term_log).epsilon(1e-5));
    CHECK(twice.term_rest == doctest::Approx(2.0 * once.term_rest).epsilon(1e-5));
  }

  SUBCASE("radius sweep satisfies one linear relation") {
    // sum = a * term_log + b * term_rest with a = b = 1.
    for (double r : {0.5, 0.7, 0.9}) {
      GreenCheck check = green_identity_check(product({{r, 0.0}}), 0.5, 1e-6);
      CHECK(check.sum_side ==
            doctest::Approx(check.term_log + check.term_rest).epsilon(1e-4));
    }
  }

  SUBCASE("zeros near the origin or circle are rejected") {
    CHECK_THROWS_AS(green_identity_check(product({{1e-4, 0.0}}), 0.5, 1e-4), Error);
    CHECK_THROWS_AS(green_identity_check(product({{1.0 - 1e-4, 0.0}}), 0.5, 1e-4),
                    Error);
  }
}
