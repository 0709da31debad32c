#include "signlab/funcrep.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "signlab/special.hpp"

namespace signlab {

using json = nlohmann::json;

// ---------------------------------------------------------------- Spline

Spline::Spline(const std::vector<double>& x, const std::vector<double>& y)
    : x_(x), y_(y), m_(x.size()) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error("Spline: need >= 2 matching nodes");
  if (n == 2) {
    m_[0] = m_[1] = (y[1] - y[0]) / (x[1] - x[0]);
    return;
  }
  // Clamped end slopes from one-sided 3-point differences.
  auto slope3 = [&](size_t i0, size_t i1, size_t i2) {
    double h1 = x[i1] - x[i0], h2 = x[i2] - x[i0];
    double d1 = (y[i1] - y[i0]) / h1, d2 = (y[i2] - y[i0]) / h2;
    return d1 + (d1 - d2) * h1 / (h2 - h1);
  };
  double d0 = slope3(0, 1, 2);
  double dn = slope3(n - 1, n - 2, n - 3);
  // Tridiagonal system for interior first derivatives (C2 cubic).
  std::vector<double> a(n), b(n), c(n), r(n);
  b[0] = 1.0;
  r[0] = d0;
  b[n - 1] = 1.0;
  r[n - 1] = dn;
  for (size_t i = 1; i + 1 < n; ++i) {
    double hl = x[i] - x[i - 1], hr = x[i + 1] - x[i];
    a[i] = 1.0 / hl;
    b[i] = 2.0 * (1.0 / hl + 1.0 / hr);
    c[i] = 1.0 / hr;
    r[i] = 3.0 * ((y[i] - y[i - 1]) / (hl * hl) +
                  (y[i + 1] - y[i]) / (hr * hr));
  }
  for (size_t i = 1; i < n; ++i) {
    double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    r[i] -= w * r[i - 1];
  }
  m_[n - 1] = r[n - 1] / b[n - 1];
  for (size_t i = n - 1; i-- > 0;) m_[i] = (r[i] - c[i] * m_[i + 1]) / b[i];
}

double Spline::operator()(double t) const {
  if (t <= x_.front()) return y_.front() + m_.front() * (t - x_.front());
  if (t >= x_.back()) return y_.back() + m_.back() * (t - x_.back());
  size_t hi = std::upper_bound(x_.begin(), x_.end(), t) - x_.begin();
  size_t lo = hi - 1;
  double h = x_[hi] - x_[lo], u = (t - x_[lo]) / h;
  double u2 = u * u, u3 = u2 * u;
  double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
  double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
  return h00 * y_[lo] + h * h10 * m_[lo] + h01 * y_[hi] + h * h11 * m_[hi];
}

// ---------------------------------------------------------------- SampledProfile

void SampledProfile::validate() const {
  if (radii.size() != values.size() || radii.size() < 2)
    throw Error("SampledProfile: radii/values size mismatch or too short");
  if (radii.front() != 0.0) throw Error("SampledProfile: radii[0] must be 0");
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      throw Error("SampledProfile: radii not strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw Error("SampledProfile: non-finite value");
}

void SampledProfile::finalize() {
  validate();
  if (interpolation == Cubic)
    spline = std::make_shared<Spline>(radii, values);
}

double SampledProfile::eval(double r) const {
  r = std::abs(r);
  if (r > radii.back()) {
    if (tail.kind == TailBound::Zero) return 0.0;
    if (tail.kind == TailBound::Gauss)
      return values.back() *
             std::exp(-kPi * tail.p * (r * r - radii.back() * radii.back()));
    return values.back() * std::pow(r / radii.back(), -tail.p);
  }
  if (interpolation == Cubic) {
    if (!spline) throw Error("SampledProfile: finalize() not called");
    return (*spline)(r);
  }
  size_t hi = std::upper_bound(radii.begin(), radii.end(), r) - radii.begin();
  if (hi == 0) return values.front();
  if (hi == radii.size()) return values.back();
  double u = (r - radii[hi - 1]) / (radii[hi] - radii[hi - 1]);
  return values[hi - 1] * (1 - u) + values[hi] * u;
}

// ---------------------------------------------------------------- closed forms

namespace {

double sincsq_base(double x) {
  x = std::abs(x);
  if (x < 1e-3) {
    double t = kPi * x * kPi * x;
    return 1.0 - t / 3.0 + 2.0 * t * t / 45.0 - t * t * t / 315.0;
  }
  double s = std::sin(kPi * x) / (kPi * x);
  return s * s;
}

double prop1_base(double x) {
  x = std::abs(x);
  double u = x - 1.0;
  if (std::abs(u) < 1e-3) {
    double th = 0.5 * kPi * u, t = th * th;
    // sin^2(th) = th^2 (1 - t/3 + 2t^2/45 - t^3/315)
    return (kPi * kPi * u / 4.0) *
           (1.0 - t / 3.0 + 2.0 * t * t / 45.0 - t * t * t / 315.0) /
           (u + 2.0);
  }
  double s = std::sin(0.5 * kPi * (x - 1.0));
  return s * s / (x * x - 1.0);
}

// (J_{d/2}(2 pi x) / x^{d/2})^2, evaluated via J_nu(z)/z^nu to keep the
// removable singularity at x = 0 tame.
double chihat_base(int d, double x) {
  x = std::abs(x);
  double nu = 0.5 * d;
  double z = 2.0 * kPi * x;
  double q;  // J_nu(z)/z^nu
  if (z < 0.5) {
    double w = 0.25 * z * z;
    q = (1.0 - w / (nu + 1.0) * (1.0 - w / (2.0 * (nu + 2.0)) *
                                           (1.0 - w / (3.0 * (nu + 3.0))))) /
        (std::pow(2.0, nu) * std::tgamma(nu + 1.0));
  } else {
    q = bessel_j(nu, z) / std::pow(z, nu);
  }
  double v = std::pow(2.0 * kPi, nu) * q;
  return v * v;
}

double ball_autocorr_base(int d, double x) {
  x = std::abs(x);
  if (x >= 2.0) return 0.0;
  if (d == 1) return 2.0 - x;
  double e = 0.5 * (d - 1);
  auto f = [&](double y) { return std::pow(1.0 - y * y, e); };
  return 2.0 * ball_volume(d - 1) *
         integrate_adaptive(f, 0.5 * x, 1.0, 1e-13, 1e-13).value;
}

double cf_base_eval(CFKind k, int d, double x) {
  switch (k) {
    case CFKind::Tent: return std::max(1.0 - std::abs(x), 0.0);
    case CFKind::SincSq: return sincsq_base(x);
    case CFKind::Prop1Minimizer: return prop1_base(x);
    case CFKind::Gaussian: return std::exp(-kPi * x * x);
    case CFKind::Chi: return std::max(2.0 - std::abs(x), 0.0);
    case CFKind::ChiHat: return chihat_base(d, x);
    case CFKind::IndicatorBallAutocorr: return ball_autocorr_base(d, x);
    case CFKind::Custom: break;
  }
  throw Error("cf_base_eval: custom kind has no base");
}

struct Facts {
  double nonneg_beyond = kNaN;
  double support = kInf;
  double band = kInf;
  double period = 2.0;
  TailBound tail;
};

Facts cf_base_facts(CFKind k, int d) {
  Facts f;
  switch (k) {
    case CFKind::Tent:
      f = {0.0, 1.0, kInf, 1.0, TailBound::zero()};
      break;
    case CFKind::SincSq:
      f = {0.0, kInf, 1.0, 1.0, TailBound::decay(1.0 / (kPi * kPi), 2.0)};
      break;
    case CFKind::Prop1Minimizer:
      f = {1.0, kInf, 0.5, 2.0, TailBound::decay(2.0, 2.0)};
      break;
    case CFKind::Gaussian:
      f = {0.0, kInf, kInf, 1.0, TailBound::gauss(1.0, 1.0)};
      break;
    case CFKind::Chi:
      f = {0.0, 2.0, kInf, 0.5, TailBound::zero()};
      break;
    case CFKind::ChiHat:
      f = {0.0, kInf, 2.0, 0.5,
           TailBound::decay(1.0 / (kPi * kPi), d + 1.0)};
      break;
    case CFKind::IndicatorBallAutocorr:
      f = {0.0, 2.0, kInf, 0.5, TailBound::zero()};
      break;
    case CFKind::Custom:
      throw Error("cf_base_facts: custom");
  }
  return f;
}

TailBound scale_tail(TailBound t, double amp, double lam) {
  double a = std::abs(amp);
  switch (t.kind) {
    case TailBound::Zero: return t;
    case TailBound::Decay: return TailBound::decay(a * t.c * std::pow(lam, -t.p), t.p);
    case TailBound::Gauss: return TailBound::gauss(a * t.c, t.p * lam * lam);
  }
  return t;
}

Facts closed_form_facts(const ClosedForm& cf, int d) {
  Facts f;
  if (cf.kind == CFKind::Custom) {
    if (!cf.custom) throw Error("custom closed form without data");
    f.nonneg_beyond = cf.custom->nonneg_beyond;
    f.support = cf.custom->support_radius;
    f.band = cf.custom->band_radius;
    f.period = cf.custom->osc_period;
    f.tail = cf.custom->tail;
  } else {
    f = cf_base_facts(cf.kind, d);
  }
  double lam = cf.dilation;
  if (!(lam > 0.0)) throw Error("dilation must be positive");
  Facts out;
  out.support = f.support / lam;
  out.band = f.band * lam;
  out.period = f.period / lam;
  out.tail = scale_tail(f.tail, cf.amplitude, lam);
  if (cf.amplitude >= 0.0)
    out.nonneg_beyond = f.nonneg_beyond / lam;
  else if (std::isfinite(f.support))
    out.nonneg_beyond = f.support / lam;  // f == 0 (hence >= 0) past support
  else
    out.nonneg_beyond = kNaN;
  return out;
}

// Facts for an eigen expansion: Gaussian-type tail and (when the leading
// coefficient has the right sign) a root-bound nonnegativity radius.
Facts eigen_facts(const EigenExpansion& e, int d) {
  Facts f;
  f.support = kInf;
  f.band = kInf;
  f.period = 1.0;
  int kmax = (int)e.coeffs.size() - 1;
  while (kmax >= 0 && e.coeffs[kmax] == 0.0) --kmax;
  if (kmax < 0) {
    f.tail = TailBound::zero();
    f.nonneg_beyond = 0.0;
    return f;
  }
  double ub = laguerre_root_bound(e.coeffs, 0.5 * d - 1.0);
  double rstar = std::sqrt(std::max(ub, 0.0) / (2.0 * kPi)) + 1e-6;
  if (e.sign * e.coeffs[kmax] > 0.0) f.nonneg_beyond = rstar;
  // |f(x)| <= C exp(-pi x^2 / 2) with C calibrated on a grid past the roots.
  double c = 0.0;
  for (int i = 0; i <= 40; ++i) {
    double x = rstar * (1.0 + i / 40.0) + 0.2 * i;
    double v = 0.0;
    auto b = eigen_basis_all(kmax, d, x);
    for (int k = 0; k <= kmax; ++k) v += e.coeffs[k] * b[k];
    c = std::max(c, std::abs(v) * std::exp(0.5 * kPi * x * x));
  }
  f.tail = TailBound::gauss(std::max(c, 1e-300), 0.5);
  return f;
}

Facts spec_facts(const FunctionSpec& f) {
  if (auto* cf = std::get_if<ClosedForm>(&f.rep))
    return closed_form_facts(*cf, f.dim);
  if (auto* e = std::get_if<EigenExpansion>(&f.rep))
    return eigen_facts(*e, f.dim);
  const auto& sp = std::get<SampledProfile>(f.rep);
  Facts out;
  out.support = sp.tail.kind == TailBound::Zero ? sp.radii.back() : kInf;
  out.band = kInf;
  out.period = 1.0;
  out.tail = sp.tail;
  if (sp.tail.kind == TailBound::Zero)
    out.nonneg_beyond = sp.radii.back();
  else if (sp.values.back() >= 0.0)
    out.nonneg_beyond = sp.radii.back();  // decay extrapolation keeps the sign
  return out;
}

}  // namespace

// ---------------------------------------------------------------- evaluate

double evaluate(const FunctionSpec& f, double x) {
  if (!std::isfinite(x)) throw Error("evaluate: non-finite radius");
  x = std::abs(x);
  if (auto* cf = std::get_if<ClosedForm>(&f.rep)) {
    if (!std::isfinite(cf->amplitude) || !std::isfinite(cf->dilation))
      throw Error("evaluate: NaN parameters");
    double u = cf->dilation * x;
    if (cf->kind == CFKind::Custom) {
      if (!cf->custom || !cf->custom->eval)
        throw Error("evaluate: custom closed form without evaluator");
      return cf->amplitude * cf->custom->eval(u);
    }
    return cf->amplitude * cf_base_eval(cf->kind, f.dim, u);
  }
  if (auto* e = std::get_if<EigenExpansion>(&f.rep)) {
    if (e->coeffs.empty()) return 0.0;
    auto b = eigen_basis_all((int)e->coeffs.size() - 1, f.dim, x);
    double v = 0.0, scale = 0.0;
    for (size_t k = 0; k < e->coeffs.size(); ++k) {
      v += e->coeffs[k] * b[k];
      scale += std::abs(e->coeffs[k] * b[k]);
    }
    // Below the conditioning floor of the sum the sign is not resolvable;
    // snap to zero rather than report roundoff noise.
    if (std::abs(v) < 1e-13 * scale) return 0.0;
    return v;
  }
  return std::get<SampledProfile>(f.rep).eval(x);
}

// ---------------------------------------------------------------- facts API

double support_radius(const FunctionSpec& f) { return spec_facts(f).support; }
double band_radius(const FunctionSpec& f) { return spec_facts(f).band; }
double nonneg_beyond(const FunctionSpec& f) { return spec_facts(f).nonneg_beyond; }
TailBound tail_bound(const FunctionSpec& f) { return spec_facts(f).tail; }
double osc_period(const FunctionSpec& f) { return spec_facts(f).period; }

// ---------------------------------------------------------------- integration

QuadratureResult integrate_weighted(const FunctionSpec& f, int weight,
                                    double a, double b) {
  auto g = [&](double r) { return std::pow(r, weight) * evaluate(f, r); };
  auto g0 = [&](double r) { return evaluate(f, r); };
  RealFn integrand = weight == 0 ? (RealFn)g0 : (RealFn)g;
  if (std::isfinite(b)) return integrate_adaptive(integrand, a, b, 1e-12, 1e-12);
  Facts facts = spec_facts(f);
  if (std::isfinite(facts.support))
    return integrate_adaptive(integrand, a, facts.support, 1e-12, 1e-12);
  if (facts.tail.kind == TailBound::Gauss) {
    double R = facts.tail.cutoff(1e-16, weight);
    if (!std::isfinite(R)) throw Error("integrate: tail cutoff failed");
    return integrate_adaptive(integrand, a, std::max(R, a + 1.0), 1e-12, 1e-12);
  }
  if (facts.tail.integral_beyond(16.0, weight) == kInf)
    throw Error("integrate: not integrable (divergent tail)");
  double cell = std::clamp(facts.period, 0.25, 4.0);
  double R0 = cell * std::ceil(std::max(16.0, a + 1.0) / cell);
  QuadratureResult res = integrate_adaptive(integrand, a, R0, 1e-12, 1e-12);
  double tail = richardson_tail(integrand, R0, cell, 8);
  res.value += tail;
  res.error_estimate += 1e-10 * std::abs(tail) + 1e-13;
  return res;
}

QuadratureResult l1_norm_q(const FunctionSpec& f) {
  int d = f.dim;
  auto integrand = [&](double r) {
    return std::pow(r, d - 1) * std::abs(evaluate(f, r));
  };
  Facts facts = spec_facts(f);
  QuadratureResult res;
  if (std::isfinite(facts.support)) {
    res = integrate_adaptive(integrand, 0.0, facts.support, 1e-12, 1e-12);
  } else if (facts.tail.kind == TailBound::Gauss) {
    double R = facts.tail.cutoff(1e-16, d - 1);
    res = integrate_adaptive(integrand, 0.0, R, 1e-12, 1e-12);
  } else {
    if (facts.tail.integral_beyond(16.0, d - 1) == kInf)
      throw Error("l1_norm: not integrable");
    double cell = std::clamp(facts.period, 0.25, 4.0);
    double R0 = cell * std::ceil(16.0 / cell);
    res = integrate_adaptive(integrand, 0.0, R0, 1e-12, 1e-12);
    double tail = richardson_tail(integrand, R0, cell, 8);
    res.value += tail;
    res.error_estimate += 1e-9 * std::abs(res.value);
  }
  res.value *= sphere_area(d);
  res.error_estimate *= sphere_area(d);
  return res;
}

double l1_norm(const FunctionSpec& f) { return l1_norm_q(f).value; }

// ---------------------------------------------------------------- dilation

FunctionSpec dilate(const FunctionSpec& f, double lambda) {
  if (!(lambda > 0.0)) throw Error("dilate: lambda must be positive");
  FunctionSpec out = f;
  if (auto* cf = std::get_if<ClosedForm>(&out.rep)) {
    cf->dilation *= lambda;
    return out;
  }
  if (auto* e = std::get_if<EigenExpansion>(&f.rep)) {
    if (lambda == 1.0) return out;
    // Wrap: a dilated eigen expansion is no longer an exact eigenfunction.
    const FunctionSpec inner = f;
    int d = f.dim, s = e->sign;
    Facts facts = spec_facts(f);
    CustomData data2;
    data2.label = "dilated-eigen";
    data2.eval = [inner, lambda](double x) { return evaluate(inner, lambda * x); };
    double ld = std::pow(lambda, -d);
    data2.ft_eval = [inner, lambda, ld, s](double xi) {
      return ld * s * evaluate(inner, xi / lambda);
    };
    data2.nonneg_beyond = facts.nonneg_beyond / lambda;
    data2.tail = scale_tail(facts.tail, 1.0, lambda);
    data2.osc_period = facts.period / lambda;
    data2.ft_nonneg_beyond = s > 0 ? facts.nonneg_beyond * lambda : kNaN;
    data2.ft_tail_known = true;
    data2.ft_tail = scale_tail(facts.tail, ld, 1.0 / lambda);
    data2.ft_osc_period = facts.period * lambda;
    return make_custom(d, std::move(data2));
  }
  auto& sp = std::get<SampledProfile>(out.rep);
  for (double& r : sp.radii) r /= lambda;
  sp.tail = scale_tail(sp.tail, 1.0, lambda);
  sp.finalize();
  return out;
}

// ---------------------------------------------------------------- fixtures

FunctionSpec make_closed_form(CFKind kind, int dim, double amplitude,
                              double dilation) {
  if (kind == CFKind::Custom) throw Error("make_closed_form: use make_custom");
  if (dim < 1) throw Error("dimension must be >= 1");
  bool d1only = kind == CFKind::Tent || kind == CFKind::SincSq ||
                kind == CFKind::Prop1Minimizer || kind == CFKind::Chi;
  if (d1only && dim != 1)
    throw Error("make_closed_form: kind only defined for d=1");
  FunctionSpec f;
  f.dim = dim;
  f.rep = ClosedForm{kind, amplitude, dilation, nullptr};
  return f;
}

FunctionSpec make_custom(int dim, CustomData data) {
  if (dim < 1) throw Error("dimension must be >= 1");
  FunctionSpec f;
  f.dim = dim;
  ClosedForm cf;
  cf.kind = CFKind::Custom;
  cf.custom = std::make_shared<const CustomData>(std::move(data));
  f.rep = cf;
  return f;
}

FunctionSpec make_fig1_minimizer() {
  CustomData data;
  data.label = "sincsq-minus-tent";
  data.eval = [](double x) {
    return sincsq_base(x) - std::max(1.0 - std::abs(x), 0.0);
  };
  data.ft_eval = [](double xi) {
    return -(sincsq_base(xi) - std::max(1.0 - std::abs(xi), 0.0));
  };
  data.nonneg_beyond = 1.0;
  data.tail = TailBound::decay(1.0 / (kPi * kPi), 2.0);
  data.osc_period = 1.0;
  data.ft_nonneg_beyond = kNaN;  // ghat = -g is eventually <= 0
  data.ft_tail_known = true;
  data.ft_tail = TailBound::decay(1.0 / (kPi * kPi), 2.0);
  data.ft_osc_period = 1.0;
  return make_custom(1, std::move(data));
}

FunctionSpec make_prop1_minimizer() {
  return make_closed_form(CFKind::Prop1Minimizer, 1, 8.0 / (kPi * kPi));
}

// ---------------------------------------------------------------- JSON

namespace {

const char* kind_name(CFKind k) {
  switch (k) {
    case CFKind::Tent: return "tent";
    case CFKind::SincSq: return "sincsq";
    case CFKind::Prop1Minimizer: return "prop1_minimizer";
    case CFKind::Gaussian: return "gaussian";
    case CFKind::Chi: return "chi";
    case CFKind::ChiHat: return "chihat";
    case CFKind::IndicatorBallAutocorr: return "ball_autocorr";
    case CFKind::Custom: return "custom";
  }
  return "?";
}

CFKind kind_from_name(const std::string& s) {
  for (CFKind k : {CFKind::Tent, CFKind::SincSq, CFKind::Prop1Minimizer,
                   CFKind::Gaussian, CFKind::Chi, CFKind::ChiHat,
                   CFKind::IndicatorBallAutocorr})
    if (s == kind_name(k)) return k;
  throw Error("parse error at $.closed_form.kind: unknown kind '" + s + "'");
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number())
    throw Error("parse error at " + path + ": expected number");
  return j.get<double>();
}

}  // namespace

FunctionSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("parse error at $: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("parse error at $: expected object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<int>() < 1)
    throw Error("parse error at $.dim: expected positive integer");
  FunctionSpec f;
  f.dim = j["dim"].get<int>();
  if (j.contains("metadata")) f.metadata = j["metadata"].get<std::string>();
  int reps = (int)j.contains("closed_form") + (int)j.contains("eigen") +
             (int)j.contains("sampled");
  if (reps != 1)
    throw Error(
        "parse error at $: exactly one of closed_form|eigen|sampled required");
  if (j.contains("closed_form")) {
    const json& c = j["closed_form"];
    if (!c.contains("kind"))
      throw Error("parse error at $.closed_form.kind: missing");
    ClosedForm cf;
    cf.kind = kind_from_name(c["kind"].get<std::string>());
    if (c.contains("amplitude"))
      cf.amplitude = require_number(c["amplitude"], "$.closed_form.amplitude");
    if (c.contains("dilation"))
      cf.dilation = require_number(c["dilation"], "$.closed_form.dilation");
    if (!std::isfinite(cf.amplitude) || !(cf.dilation > 0.0))
      throw Error("parse error at $.closed_form: bad parameters");
    f.rep = cf;
  } else if (j.contains("eigen")) {
    const json& c = j["eigen"];
    if (!c.contains("sign") ||
        (c["sign"] != "+" && c["sign"] != "-"))
      throw Error("parse error at $.eigen.sign: expected \"+\" or \"-\"");
    EigenExpansion e;
    e.sign = c["sign"] == "+" ? 1 : -1;
    if (!c.contains("coeffs") || !c["coeffs"].is_array())
      throw Error("parse error at $.eigen.coeffs: expected array");
    for (size_t k = 0; k < c["coeffs"].size(); ++k) {
      double v = require_number(c["coeffs"][k],
                                "$.eigen.coeffs[" + std::to_string(k) + "]");
      e.coeffs.push_back(v);
      int parity = (k % 2 == 0) ? 1 : -1;
      if (v != 0.0 && parity != e.sign)
        throw Error("parse error at $.eigen.coeffs[" + std::to_string(k) +
                    "]: nonzero coefficient with parity != sign");
    }
    f.rep = e;
  } else {
    const json& c = j["sampled"];
    SampledProfile sp;
    for (const char* key : {"radii", "values"})
      if (!c.contains(key) || !c[key].is_array())
        throw Error(std::string("parse error at $.sampled.") + key +
                    ": expected array");
    sp.radii = c["radii"].get<std::vector<double>>();
    sp.values = c["values"].get<std::vector<double>>();
    if (c.contains("interpolation")) {
      std::string s = c["interpolation"].get<std::string>();
      if (s == "linear") sp.interpolation = SampledProfile::Linear;
      else if (s == "cubic") sp.interpolation = SampledProfile::Cubic;
      else throw Error("parse error at $.sampled.interpolation: unknown");
    }
    if (!c.contains("tail") || !c["tail"].is_object() ||
        !c["tail"].contains("kind"))
      throw Error("parse error at $.sampled.tail: missing descriptor");
    std::string tk = c["tail"]["kind"].get<std::string>();
    if (tk == "zero") {
      sp.tail = TailBound::zero();
    } else if (tk == "decay" || tk == "gauss") {
      double cc = require_number(c["tail"]["c"], "$.sampled.tail.c");
      double pp = require_number(c["tail"]["p"], "$.sampled.tail.p");
      sp.tail = tk == "decay" ? TailBound::decay(cc, pp)
                              : TailBound::gauss(cc, pp);
    } else {
      throw Error("parse error at $.sampled.tail.kind: unknown");
    }
    try {
      sp.finalize();
    } catch (const Error& e) {
      throw Error(std::string("parse error at $.sampled: ") + e.what());
    }
    f.rep = sp;
  }
  return f;
}

std::string serialize_spec(const FunctionSpec& f) {
  json j;
  j["dim"] = f.dim;
  if (!f.metadata.empty()) j["metadata"] = f.metadata;
  if (auto* cf = std::get_if<ClosedForm>(&f.rep)) {
    if (cf->kind == CFKind::Custom)
      throw Error("serialize_spec: custom closed form; sample it first");
    j["closed_form"] = {{"kind", kind_name(cf->kind)},
                        {"amplitude", cf->amplitude},
                        {"dilation", cf->dilation}};
  } else if (auto* e = std::get_if<EigenExpansion>(&f.rep)) {
    j["eigen"] = {{"sign", e->sign > 0 ? "+" : "-"}, {"coeffs", e->coeffs}};
  } else {
    const auto& sp = std::get<SampledProfile>(f.rep);
    json t;
    if (sp.tail.kind == TailBound::Zero) t = {{"kind", "zero"}};
    else if (sp.tail.kind == TailBound::Decay)
      t = {{"kind", "decay"}, {"c", sp.tail.c}, {"p", sp.tail.p}};
    else t = {{"kind", "gauss"}, {"c", sp.tail.c}, {"p", sp.tail.p}};
    j["sampled"] = {
        {"radii", sp.radii},
        {"values", sp.values},
        {"interpolation",
         sp.interpolation == SampledProfile::Cubic ? "cubic" : "linear"},
        {"tail", t}};
  }
  return j.dump(2);
}

}  // namespace signlab
