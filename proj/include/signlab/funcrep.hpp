#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "signlab/common.hpp"
#include "signlab/quadrature.hpp"

namespace signlab {

enum class CFKind {
  Tent,                  // (1-|x|)_+                         (d=1)
  SincSq,                // sin^2(pi x)/(pi x)^2              (d=1)
  Prop1Minimizer,        // sin^2(pi(x-1)/2)/(x^2-1)          (d=1)
  Gaussian,              // exp(-pi x^2)                      (any d)
  Chi,                   // (2-|x|)_+ = 1_{B_1} * 1_{B_1}     (d=1)
  ChiHat,                // (J_{d/2}(2 pi x)/x^{d/2})^2       (any d)
  IndicatorBallAutocorr, // 1_{B_1} * 1_{B_1}                 (any d)
  Custom,
};

/// Payload for ClosedForm kind Custom: an opaque radial profile with the
/// analytic facts the rest of the library needs.  Instances are immutable.
struct CustomData {
  std::string label;
  std::function<double(double)> eval;     // radial profile value
  std::function<double(double)> ft_eval;  // transform's radial profile; may be null
  double nonneg_beyond = kNaN;   // certified f >= 0 past this radius (NaN: unknown)
  TailBound tail;                // upper bound on |f|
  double support_radius = kInf;  // supp f within this ball
  double band_radius = kInf;     // supp of the transform (inf: not bandlimited)
  double osc_period = 2.0;       // dominant oscillation period of the tail
  // Facts about the transform itself (used when fourier_transform swaps the
  // two evaluators):
  double ft_nonneg_beyond = kNaN;
  bool ft_tail_known = false;
  TailBound ft_tail;
  double ft_osc_period = 2.0;
};

struct ClosedForm {
  CFKind kind = CFKind::Tent;
  double amplitude = 1.0;
  double dilation = 1.0;  // f(x) = amplitude * base(dilation * x)
  std::shared_ptr<const CustomData> custom;  // only for kind Custom
};

struct EigenExpansion {
  int sign = 1;                 // s in {+1,-1}; fhat = s f by construction
  std::vector<double> coeffs;   // c_k, index = basis order k
};

/// Natural cubic spline with clamped (finite-difference) end slopes.
class Spline {
 public:
  Spline() = default;
  Spline(const std::vector<double>& x, const std::vector<double>& y);
  double operator()(double t) const;
  double min_x() const { return x_.front(); }
  double max_x() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, m_;  // m_: node derivatives (Hermite form)
};

struct SampledProfile {
  std::vector<double> radii;   // strictly increasing, radii[0] == 0
  std::vector<double> values;
  enum Interp { Linear, Cubic } interpolation = Cubic;
  TailBound tail;
  std::shared_ptr<const Spline> spline;  // built by finalize()

  void validate() const;
  void finalize();  // validate + build the interpolant
  double eval(double r) const;
};

struct FunctionSpec {
  int dim = 1;
  std::variant<ClosedForm, EigenExpansion, SampledProfile> rep;
  std::string metadata;
};

// ---- evaluation & (de)serialization ----
double evaluate(const FunctionSpec& f, double x);
FunctionSpec parse_spec(const std::string& json_text);
std::string serialize_spec(const FunctionSpec& f);

// ---- norms & dilation ----
QuadratureResult l1_norm_q(const FunctionSpec& f);
double l1_norm(const FunctionSpec& f);
/// Returns x -> f(lambda x).
FunctionSpec dilate(const FunctionSpec& f, double lambda);

// ---- analytic facts used across modules ----
double support_radius(const FunctionSpec& f);   // inf if unbounded support
double band_radius(const FunctionSpec& f);      // supp of transform; inf if none
double nonneg_beyond(const FunctionSpec& f);    // NaN if not certifiable
TailBound tail_bound(const FunctionSpec& f);
double osc_period(const FunctionSpec& f);

// ---- fixtures ----
FunctionSpec make_closed_form(CFKind kind, int dim = 1, double amplitude = 1.0,
                              double dilation = 1.0);
FunctionSpec make_custom(int dim, CustomData data);
/// g = fhat - f for f = Tent: the classic d=1 eigenfunction with ghat = -g.
FunctionSpec make_fig1_minimizer();
/// The Proposition-1 minimizer with its canonical amplitude 8/pi^2.
FunctionSpec make_prop1_minimizer();

/// Weighted integral  int_a^b r^weight f(r) dr (quadrature only; no surface
/// constant).  b may be kInf, in which case the declared tail is used.
QuadratureResult integrate_weighted(const FunctionSpec& f, int weight,
                                    double a, double b);

}  // namespace signlab
