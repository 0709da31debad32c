#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace signlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Lebesgue measure of the unit ball in R^d, pi^{d/2}/Gamma(d/2+1).
inline double ball_volume(int d) {
  return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

/// Surface measure of the unit sphere S^{d-1}, 2 pi^{d/2}/Gamma(d/2).
inline double sphere_area(int d) {
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

/// Tail descriptor for radial profiles: identically zero beyond the stated
/// support, bounded by c * r^{-p}, or bounded by c * exp(-pi p r^2).
/// Power/Gaussian bounds are only relied upon for r >= ~8 (engines integrate
/// the core region directly).
struct TailBound {
  enum Kind { Zero, Decay, Gauss } kind = Zero;
  double c = 0.0;
  double p = 0.0;  // exponent (Decay) or Gaussian rate multiplier (Gauss)

  static TailBound zero() { return {Zero, 0.0, 0.0}; }
  static TailBound decay(double c, double p) { return {Decay, c, p}; }
  static TailBound gauss(double c, double a) { return {Gauss, c, a}; }

  // Bound on int_R^inf |f| r^{w} dr induced by the descriptor.
  double integral_beyond(double R, int w) const {
    if (kind == Zero) return 0.0;
    if (kind == Gauss) {
      double s = kPi * p;
      if (2.0 * s * R * R <= w + 1.0) return kInf;
      double lead = (w - 1) * std::log(R) - s * R * R + std::log(c / (2 * s));
      return std::exp(lead) / (1.0 - (w - 1) / (2.0 * s * R * R));
    }
    double q = p - w;
    if (q <= 1.0) return kInf;
    return c * std::pow(R, 1.0 - q) / (q - 1.0);
  }

  // Radius beyond which integral_beyond(R, w) < eps (kInf if impossible).
  double cutoff(double eps, int w) const {
    if (kind == Zero) return 0.0;
    double R = 1.0;
    for (int i = 0; i < 64; ++i, R *= 1.5)
      if (integral_beyond(R, w) < eps) return R;
    return kInf;
  }
};

}  // namespace signlab
