#include <doctest.h>

#include "core/disc.hpp"
#include "core/rng.hpp"

using namespace npick;

TEST_CASE("moebius examples") {
  CHECK(std::abs(MoebiusMap::identity().apply({0.3, 0.1}) - Complex{0.3, 0.1}) < 1e-15);

  MoebiusMap automorphism = MoebiusMap::disc_automorphism({0.5, 0.0});
  CHECK(std::abs(automorphism.apply({0.5, 0.0})) < 1e-15);

  CHECK(std::abs(MoebiusMap::inversion().apply({2.0, 0.0}) - Complex{0.5, 0.0}) < 1e-15);
}

TEST_CASE("moebius composition law and associativity") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_map = [&rng] {
      MoebiusMap m{{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                   {rng.uniform(-1, 1), rng.uniform(-1, 1)},
                   {rng.uniform(-1, 1), rng.uniform(-1, 1)},
                   {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
      return m;
    };
    MoebiusMap m1 = random_map(), m2 = random_map(), m3 = random_map();
    if (!m1.invertible(1e-3) || !m2.invertible(1e-3) || !m3.invertible(1e-3))
      continue;
    Complex z = rng.in_disc(0.8);
    Complex composed = m1.compose(m2).apply(z);
    Complex nested = m1.apply(m2.apply(z));
    CHECK(std::abs(composed - nested) <= 1e-12 * std::max(1.0, std::abs(nested)));

    MoebiusMap left = m1.compose(m2).compose(m3);
    MoebiusMap right = m1.compose(m2.compose(m3));
    Complex a = left.apply(z), b = right.apply(z);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("disc automorphisms preserve the circle") {
  Rng rng(12);
  for (int trial = 0; trial < 8; ++trial) {
    MoebiusMap m = MoebiusMap::disc_automorphism(rng.in_disc(0.9));
    for (double theta : boundary_grid(64)) {
      double mod = std::abs(m.apply(std::polar(1.0, theta)));
      CHECK(std::abs(mod - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("moebius pole detection") {
  MoebiusMap inversion = MoebiusMap::inversion();
  CHECK_THROWS_AS(inversion.apply({0.0, 0.0}), Error);
  try {
    inversion.apply({0.0, 0.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::pole_at_point);
  }
}

TEST_CASE("annulus index examples") {
  CHECK(annulus_index(Complex{1.0 - 0.75 * 0.125, 0.0}) == 3);
  CHECK(annulus_index(Complex{1.0 - 0.03125, 0.0}) == 5);  // 1-|z| = 2^-5
  CHECK(annulus_index(Complex{0.0, 0.0}) == 0);
  CHECK(annulus_index(Complex{0.3, 0.0}) == 0);
  CHECK(annulus_index(Complex{0.5, 0.0}) == 1);  // inner edge closed
}

TEST_CASE("annulus index matches membership and is monotone") {
  Rng rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    Complex z = rng.in_disc(1.0 - 1e-12);
    int j = annulus_index(z);
    CHECK(DyadicAnnulus{j}.contains(z));
    if (j > 0) CHECK_FALSE(DyadicAnnulus{j - 1}.contains(z));
    // monotone: shrinking 1-|z| cannot decrease the index
    Complex closer = z * (1.0 + 0.5 * (1.0 - std::abs(z)) / std::max(std::abs(z), 0.5));
    if (std::abs(closer) < 1.0 && std::abs(closer) > std::abs(z))
      CHECK(annulus_index(closer) >= j);
  }
}

TEST_CASE("dyadic boxes tile the circle") {
  auto level0 = dyadic_boxes(0);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0].arclen == doctest::Approx(two_pi));
  CHECK(level0[0].depth() == doctest::Approx(1.0));

  auto level3 = dyadic_boxes(3);
  REQUIRE(level3.size() == 8);
  double total = 0.0;
  for (const CarlesonBox& box : level3) {
    CHECK(box.arclen == doctest::Approx(pi / 4.0));
    total += box.arclen;
  }
  CHECK(total == doctest::Approx(two_pi));

  CHECK_THROWS_AS(dyadic_boxes(25), Error);
  CHECK_THROWS_AS(dyadic_boxes(-1), Error);
}

TEST_CASE("carleson box membership") {
  CarlesonBox box{0.0, pi / 2.0};  // depth 1/4
  CHECK(box.contains(std::polar(0.9, 0.1)));
  CHECK_FALSE(box.contains(std::polar(0.5, 0.1)));   // too deep
  CHECK_FALSE(box.contains(std::polar(0.9, 1.0)));   // outside the arc
}

TEST_CASE("pseudohyperbolic distance basics") {
  CHECK(pseudohyperbolic({0.0, 0.0}, {0.5, 0.0}) == doctest::Approx(0.5));
  CHECK(pseudohyperbolic({0.3, 0.1}, {0.3, 0.1}) == 0.0);
}
