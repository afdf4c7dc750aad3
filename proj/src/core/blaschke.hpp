#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disc.hpp"

namespace npick {

// Normalized automorphism factor vanishing at a: (|a|/a)(a - z)/(1 - conj(a) z),
// reducing to z when a = 0 so a zero at the origin stays well defined.
Complex blaschke_factor(Complex a, Complex z);
Complex blaschke_factor_derivative(Complex a, Complex z);

enum class AngleRule { fixed, equidistributed, random };

const char* to_string(AngleRule rule);
AngleRule angle_rule_from_string(const std::string& s);

struct GeneratorInfo {
  std::string kind;         // "exponential" | "power" | "custom"
  int per_annulus = 0;      // exponential: zeros per annulus
  double exponent = 0.0;    // power: 1 - |z_n| = n^{-p}
  AngleRule angle_rule = AngleRule::fixed;
  double theta0 = 0.0;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<int> clipped;          // indices whose radius was clipped
  std::vector<std::string> warnings;
};

class ZeroSequence {
 public:
  ZeroSequence() = default;
  explicit ZeroSequence(std::vector<Complex> zeros,
                        std::optional<GeneratorInfo> generator = {});

  // M zeros at 1 - |z| = 1.5 * 2^{-j-1} in each annulus j = 1..annuli.
  static ZeroSequence exponential(int per_annulus, AngleRule rule, int annuli,
                                  double theta0 = 0.0, std::uint64_t seed = 0);
  // 1 - |z_n| = n^{-p} for n = 1..count, clipped into (1e-12, 1].
  static ZeroSequence power(double exponent, AngleRule rule, int count,
                            double theta0 = 0.0, std::uint64_t seed = 0);

  const std::vector<Complex>& zeros() const { return zeros_; }
  std::size_t size() const { return zeros_.size(); }
  bool empty() const { return zeros_.empty(); }
  double blaschke_sum() const { return blaschke_sum_; }
  const std::optional<GeneratorInfo>& generator() const { return generator_; }

  ZeroSequence rotated(double phi) const;
  ZeroSequence truncated(std::size_t count) const;

 private:
  std::vector<Complex> zeros_;
  double blaschke_sum_ = 0.0;
  std::optional<GeneratorInfo> generator_;
};

// Bounded analytic function on the disc with unimodular boundary values.
// Implementations provide the complex derivative as well; both must be safe
// to call concurrently.
class InnerFunction {
 public:
  virtual ~InnerFunction() = default;
  virtual Complex value(Complex z) const = 0;
  virtual Complex derivative(Complex z) const = 0;
};

using InnerPtr = std::shared_ptr<const InnerFunction>;

class BlaschkeProduct final : public InnerFunction {
 public:
  BlaschkeProduct() = default;  // empty product, identically 1
  explicit BlaschkeProduct(ZeroSequence zeros);

  Complex value(Complex z) const override;
  Complex derivative(Complex z) const override;

  // sum_k (1 - |a_k|^2) / |e^{i theta} - a_k|^2, the boundary modulus of B'.
  double angular_derivative_modulus(double theta) const;

  const ZeroSequence& zero_sequence() const { return zeros_; }
  const std::vector<Complex>& zeros() const { return zeros_.zeros(); }
  std::size_t degree() const { return zeros_.size(); }

 private:
  ZeroSequence zeros_;
  std::vector<std::size_t> order_;  // evaluation order, decreasing 1 - |a|
};

InnerPtr make_inner(BlaschkeProduct b);

// z -> (f(z) - w) / (1 - conj(w) f(z)); w = 0 returns f unchanged.
InnerPtr frostman_shift(InnerPtr f, Complex w);

}  // namespace npick
