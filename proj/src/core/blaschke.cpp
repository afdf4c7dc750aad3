#include "blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rng.hpp"

namespace npick {

namespace {
constexpr double kMinGap = 1e-12;          // generators clip 1 - |z| below this
constexpr double kGoldenFrac = 0.6180339887498949;
}  // namespace

Complex blaschke_factor(Complex a, Complex z) {
  if (a == Complex{0.0}) return z;
  return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

Complex blaschke_factor_derivative(Complex a, Complex z) {
  if (a == Complex{0.0}) return Complex{1.0};
  Complex denom = 1.0 - std::conj(a) * z;
  return (std::abs(a) / a) * (std::norm(a) - 1.0) / (denom * denom);
}

const char* to_string(AngleRule rule) {
  switch (rule) {
    case AngleRule::fixed: return "fixed";
    case AngleRule::equidistributed: return "equidistributed";
    case AngleRule::random: return "random";
  }
  return "fixed";
}

AngleRule angle_rule_from_string(const std::string& s) {
  if (s == "fixed") return AngleRule::fixed;
  if (s == "equidistributed") return AngleRule::equidistributed;
  if (s == "random") return AngleRule::random;
  fail(ErrorCode::bad_params, "unknown angle rule: " + s);
}

ZeroSequence::ZeroSequence(std::vector<Complex> zeros,
                           std::optional<GeneratorInfo> generator)
    : zeros_(std::move(zeros)), generator_(std::move(generator)) {
  for (const Complex& z : zeros_) {
    double gap = 1.0 - std::abs(z);
    if (gap < 1e-14)
      fail(ErrorCode::bad_params, "zero too close to the unit circle");
    blaschke_sum_ += gap;
  }
}

namespace {

class AngleSource {
 public:
  AngleSource(AngleRule rule, double theta0, std::uint64_t seed)
      : rule_(rule), theta0_(theta0), rng_(seed) {}

  double next() {
    ++index_;
    switch (rule_) {
      case AngleRule::fixed: return theta0_;
      case AngleRule::equidistributed: {
        double frac = index_ * kGoldenFrac;
        return two_pi * (frac - std::floor(frac));
      }
      case AngleRule::random: return rng_.angle();
    }
    return theta0_;
  }

 private:
  AngleRule rule_;
  double theta0_;
  Rng rng_;
  long index_ = 0;
};

}  // namespace

ZeroSequence ZeroSequence::exponential(int per_annulus, AngleRule rule, int annuli,
                                       double theta0, std::uint64_t seed) {
  if (per_annulus < 1 || annuli < 1)
    fail(ErrorCode::bad_params, "exponential generator needs per_annulus >= 1, annuli >= 1");
  GeneratorInfo info{"exponential", per_annulus, 0.0, rule, theta0, seed,
                     annuli, {}, {}};
  AngleSource angles(rule, theta0, seed);
  std::vector<Complex> zeros;
  zeros.reserve(static_cast<std::size_t>(per_annulus) * annuli);
  for (int j = 1; j <= annuli; ++j) {
    double gap = 1.5 * std::ldexp(1.0, -j - 1);
    if (gap < kMinGap) {
      info.clipped.push_back(static_cast<int>(zeros.size()));
      gap = kMinGap;
    }
    for (int m = 0; m < per_annulus; ++m)
      zeros.push_back(std::polar(1.0 - gap, angles.next()));
  }
  if (!info.clipped.empty())
    info.warnings.push_back("annulus radii clipped at 1 - |z| = 1e-12");
  return ZeroSequence(std::move(zeros), std::move(info));
}

ZeroSequence ZeroSequence::power(double exponent, AngleRule rule, int count,
                                 double theta0, std::uint64_t seed) {
  if (count < 1) fail(ErrorCode::bad_params, "power generator needs count >= 1");
  if (exponent <= 0.0)
    fail(ErrorCode::bad_params, "power generator needs a positive exponent");
  GeneratorInfo info{"power", 0, exponent, rule, theta0, seed, count, {}, {}};
  if (exponent <= 1.0)
    info.warnings.push_back(
        "exponent <= 1: sum of 1 - |z_n| grows without bound as the count grows");
  AngleSource angles(rule, theta0, seed);
  std::vector<Complex> zeros;
  zeros.reserve(count);
  for (int n = 1; n <= count; ++n) {
    double gap = std::pow(static_cast<double>(n), -exponent);
    if (gap < kMinGap) {
      info.clipped.push_back(n - 1);
      gap = kMinGap;
    }
    if (gap > 1.0) gap = 1.0;
    zeros.push_back(std::polar(1.0 - gap, angles.next()));
  }
  if (!info.clipped.empty())
    info.warnings.push_back("radii clipped at 1 - |z| = 1e-12");
  return ZeroSequence(std::move(zeros), std::move(info));
}

ZeroSequence ZeroSequence::rotated(double phi) const {
  std::vector<Complex> zs(zeros_.size());
  Complex rot = std::polar(1.0, phi);
  std::transform(zeros_.begin(), zeros_.end(), zs.begin(),
                 [rot](Complex z) { return rot * z; });
  return ZeroSequence(std::move(zs), generator_);
}

ZeroSequence ZeroSequence::truncated(std::size_t count) const {
  std::vector<Complex> zs(zeros_.begin(),
                          zeros_.begin() + std::min(count, zeros_.size()));
  return ZeroSequence(std::move(zs), generator_);
}

BlaschkeProduct::BlaschkeProduct(ZeroSequence zeros) : zeros_(std::move(zeros)) {
  order_.resize(zeros_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  const auto& zs = zeros_.zeros();
  std::stable_sort(order_.begin(), order_.end(), [&zs](std::size_t i, std::size_t j) {
    return std::abs(zs[i]) < std::abs(zs[j]);
  });
}

Complex BlaschkeProduct::value(Complex z) const {
  const auto& zs = zeros_.zeros();
  Complex prod{1.0};
  for (std::size_t k : order_) prod *= blaschke_factor(zs[k], z);
  return prod;
}

Complex BlaschkeProduct::derivative(Complex z) const {
  const auto& zs = zeros_.zeros();
  std::size_t n = zs.size();
  if (n == 0) return Complex{0.0};
  // Product rule with prefix/suffix partial products; exact at zeros of B.
  std::vector<Complex> factors(n), prefix(n + 1), suffix(n + 1);
  for (std::size_t k = 0; k < n; ++k) factors[k] = blaschke_factor(zs[k], z);
  prefix[0] = Complex{1.0};
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * factors[k];
  suffix[n] = Complex{1.0};
  for (std::size_t k = n; k-- > 0;) suffix[k] = factors[k] * suffix[k + 1];
  Complex sum{0.0};
  for (std::size_t k = 0; k < n; ++k)
    sum += blaschke_factor_derivative(zs[k], z) * prefix[k] * suffix[k + 1];
  return sum;
}

double BlaschkeProduct::angular_derivative_modulus(double theta) const {
  Complex w = std::polar(1.0, theta);
  double sum = 0.0;
  for (const Complex& a : zeros_.zeros())
    sum += (1.0 - std::norm(a)) / std::norm(w - a);
  return sum;
}

InnerPtr make_inner(BlaschkeProduct b) {
  return std::make_shared<BlaschkeProduct>(std::move(b));
}

namespace {

class FrostmanShift final : public InnerFunction {
 public:
  FrostmanShift(InnerPtr f, Complex w) : f_(std::move(f)), w_(w) {}

  Complex value(Complex z) const override {
    Complex v = f_->value(z);
    return (v - w_) / (1.0 - std::conj(w_) * v);
  }

  Complex derivative(Complex z) const override {
    Complex v = f_->value(z);
    Complex denom = 1.0 - std::conj(w_) * v;
    return f_->derivative(z) * (1.0 - std::norm(w_)) / (denom * denom);
  }

 private:
  InnerPtr f_;
  Complex w_;
};

}  // namespace

InnerPtr frostman_shift(InnerPtr f, Complex w) {
  if (std::abs(w) >= 1.0)
    fail(ErrorCode::invalid_argument, "frostman shift needs |w| < 1");
  if (w == Complex{0.0}) return f;
  return std::make_shared<FrostmanShift>(std::move(f), w);
}

}  // namespace npick
