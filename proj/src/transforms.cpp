#include "signlab/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "signlab/special.hpp"

namespace signlab {

namespace {

FunctionSpec catalog_ft_closed(const ClosedForm& cf, int d) {
  double a = cf.amplitude, lam = cf.dilation;
  double inv = 1.0 / lam;
  double ad = a * std::pow(lam, -d);
  switch (cf.kind) {
    case CFKind::Tent:
      return make_closed_form(CFKind::SincSq, 1, a / lam, inv);
    case CFKind::SincSq:
      return make_closed_form(CFKind::Tent, 1, a / lam, inv);
    case CFKind::Gaussian:
      return make_closed_form(CFKind::Gaussian, d, ad, inv);
    case CFKind::Chi:
      return make_closed_form(CFKind::ChiHat, 1, a / lam, inv);
    case CFKind::ChiHat:
      return d == 1 ? make_closed_form(CFKind::Chi, 1, ad, inv)
                    : make_closed_form(CFKind::IndicatorBallAutocorr, d, ad, inv);
    case CFKind::IndicatorBallAutocorr:
      return make_closed_form(CFKind::ChiHat, d, ad, inv);
    case CFKind::Prop1Minimizer: {
      // base transform (alpha = 1): -(pi/2) sin(2 pi rho) on [0, 1/2], else 0.
      double amp = a / lam;
      CustomData data;
      data.label = "prop1_transform";
      data.eval = [amp, inv](double rho) {
        rho = std::abs(rho) * inv;
        if (rho >= 0.5) return 0.0;
        return -amp * 0.5 * kPi * std::sin(2.0 * kPi * rho);
      };
      {
        double a2 = a, lam2 = lam;
        data.ft_eval = [a2, lam2](double x) {
          FunctionSpec back = make_closed_form(CFKind::Prop1Minimizer, 1, a2, lam2);
          return evaluate(back, x);
        };
      }
      data.support_radius = 0.5 * lam;
      data.nonneg_beyond = 0.5 * lam;  // identically zero past the support
      data.tail = TailBound::zero();
      data.band_radius = kInf;  // its transform (f itself) is not bandlimited
      data.osc_period = lam;    // sin(2 pi rho / lam) half-period structure
      data.ft_nonneg_beyond = a >= 0.0 ? 1.0 / lam : kNaN;
      data.ft_tail_known = true;
      data.ft_tail = TailBound::decay(2.0 * std::abs(a) / (lam * lam), 2.0);
      data.ft_osc_period = 2.0 / lam;
      return make_custom(1, std::move(data));
    }
    case CFKind::Custom: {
      if (!cf.custom || !cf.custom->ft_eval)
        throw Error("fourier_transform: custom entry without transform data");
      auto src = cf.custom;
      double amp = a, il = inv;
      double scale = std::pow(lam, -d);
      CustomData out;
      out.label = src->label + "_hat";
      out.eval = [src, amp, il, scale](double rho) {
        return amp * scale * src->ft_eval(std::abs(rho) * il);
      };
      out.ft_eval = [src, amp, lam](double x) {
        return amp * src->eval(std::abs(x) * lam);
      };
      out.support_radius = src->band_radius * lam;
      out.band_radius = src->support_radius * lam;
      out.nonneg_beyond = src->ft_nonneg_beyond >= 0.0
                              ? src->ft_nonneg_beyond * lam
                              : kNaN;
      if (src->ft_tail_known) {
        TailBound t = src->ft_tail;
        // rescale for dilation 1/lam and amplitude amp*scale
        if (t.kind == TailBound::Decay)
          t = TailBound::decay(std::abs(amp * scale) * t.c * std::pow(il, -t.p), t.p);
        else if (t.kind == TailBound::Gauss)
          t = TailBound::gauss(std::abs(amp * scale) * t.c, t.p * il * il);
        out.tail = t;
      } else if (std::isfinite(out.support_radius)) {
        out.tail = TailBound::zero();
      } else {
        out.tail = TailBound::decay(kInf, 0.0);  // unusable bound
      }
      out.osc_period = src->ft_osc_period * lam;
      // The transform of the output is (a scaled copy of) the input itself.
      out.ft_nonneg_beyond =
          (amp >= 0.0 && src->nonneg_beyond >= 0.0) ? src->nonneg_beyond / lam
                                                    : kNaN;
      out.ft_tail_known = true;
      out.ft_tail = src->tail;
      if (out.ft_tail.kind == TailBound::Decay)
        out.ft_tail = TailBound::decay(
            std::abs(amp) * src->tail.c * std::pow(lam, -src->tail.p),
            src->tail.p);
      else if (out.ft_tail.kind == TailBound::Gauss)
        out.ft_tail =
            TailBound::gauss(std::abs(amp) * src->tail.c, src->tail.p * lam * lam);
      out.ft_osc_period = src->osc_period / lam;
      return make_custom(d, std::move(out));
    }
  }
  throw Error("fourier_transform: unsupported closed form");
}

}  // namespace

bool has_closed_transform(const FunctionSpec& f) {
  if (auto* cf = std::get_if<ClosedForm>(&f.rep)) {
    if (cf->kind != CFKind::Custom) return true;
    return cf->custom && cf->custom->ft_eval;
  }
  return std::holds_alternative<EigenExpansion>(f.rep);
}

FunctionSpec fourier_transform(const FunctionSpec& f) {
  if (auto* cf = std::get_if<ClosedForm>(&f.rep)) {
    FunctionSpec out = catalog_ft_closed(*cf, f.dim);
    out.dim = f.dim;
    return out;
  }
  if (auto* e = std::get_if<EigenExpansion>(&f.rep)) {
    FunctionSpec out = f;
    auto& oe = std::get<EigenExpansion>(out.rep);
    for (double& c : oe.coeffs) c *= e->sign;  // fhat = s f
    return out;
  }
  const auto& sp = std::get<SampledProfile>(f.rep);
  FunctionSpec out;
  out.dim = f.dim;
  out.rep = hankel_radial_ft(sp, f.dim);
  return out;
}

double radial_ft_value(const FunctionSpec& f, double rho) {
  const int d = f.dim;
  rho = std::abs(rho);
  if (rho < 1e-12) {
    QuadratureResult q = integrate_weighted(f, d - 1, 0.0, kInf);
    return sphere_area(d) * q.value;
  }
  RealFn kern;
  double pref;
  if (d == 1) {
    kern = [&f, rho](double r) {
      return evaluate(f, r) * std::cos(2.0 * kPi * rho * r);
    };
    pref = 2.0;
  } else {
    double nu = 0.5 * d - 1.0;
    kern = [&f, rho, nu, d](double r) {
      if (r == 0.0) return 0.0;
      return std::pow(r, 0.5 * d) * evaluate(f, r) *
             bessel_j(nu, 2.0 * kPi * r * rho);
    };
    pref = 2.0 * kPi * std::pow(rho, 1.0 - 0.5 * d);
  }
  double supp = support_radius(f);
  if (std::isfinite(supp))
    return pref * integrate_adaptive(kern, 0.0, supp, 1e-13, 1e-13, 8000).value;
  TailBound tail = tail_bound(f);
  if (tail.kind == TailBound::Gauss) {
    double R = tail.cutoff(1e-16, d);
    if (!std::isfinite(R)) throw Error("radial_ft_value: tail cutoff failed");
    return pref * integrate_adaptive(kern, 0.0, R, 1e-13, 1e-13, 8000).value;
  }
  // Slowly decaying oscillatory tail: period-aligned cells + acceleration.
  double w = d == 1 ? 0.0 : 0.5 * (d - 1);  // kernel growth r^w vs decay r^-p
  if (tail.p - w <= 1.0)
    throw Error("radial_ft_value: divergent tail");
  double P = std::clamp(osc_period(f), 0.25, 4.0);
  double R0 = P * std::ceil(8.0 / P);
  double base = integrate_adaptive(kern, 0.0, R0, 1e-13, 1e-13, 8000).value;
  double resonance = std::abs(rho - std::round(rho * P) / P);
  double tail_val;
  if (resonance < 0.004)
    tail_val = richardson_tail(kern, R0, P, 9);
  else
    tail_val = oscillatory_tail(kern, R0, P, 200, 80);
  return pref * (base + tail_val);
}

SampledProfile hankel_radial_ft(const SampledProfile& profile, int d,
                                std::vector<double> out_grid) {
  FunctionSpec f;
  f.dim = d;
  f.rep = profile;
  auto& sp = std::get<SampledProfile>(f.rep);
  if (sp.interpolation == SampledProfile::Cubic && !sp.spline) sp.finalize();
  if (sp.tail.kind == TailBound::Decay &&
      sp.tail.integral_beyond(std::max(sp.radii.back(), 8.0), d - 1) == kInf)
    throw Error("hankel_radial_ft: divergent tail");
  if (out_grid.empty()) {
    for (int i = 0; i < 400; ++i) out_grid.push_back(8.0 * i / 399.0);
  }
  SampledProfile out;
  out.radii = out_grid;
  out.values.reserve(out_grid.size());
  for (double rho : out_grid) out.values.push_back(radial_ft_value(f, rho));
  // Tail bound for the transform: for compactly supported inputs the Bessel
  // envelope gives |fhat(rho)| <= C rho^{-(d+1)/2}; otherwise heuristic.
  double mass = integrate_adaptive(
                    [&](double r) {
                      return std::pow(r, 0.5 * (d - 1)) * std::abs(sp.eval(r));
                    },
                    0.0, sp.radii.back(), 1e-10, 1e-10)
                    .value;
  double c = 2.0 * kPi * std::sqrt(1.0 / (kPi * kPi * kPi)) * mass;
  out.tail = TailBound::decay(std::max(c, 1e-300), 0.5 * (d + 1));
  out.interpolation = SampledProfile::Cubic;
  out.finalize();
  return out;
}

double convolve_direct_value(const FunctionSpec& f, const FunctionSpec& g,
                             double x) {
  if (f.dim != g.dim) throw Error("convolve_radial: dimension mismatch");
  const int d = f.dim;
  // reach of each factor: its support if compact, else the tail cutoff
  auto reach = [d](const FunctionSpec& h) {
    double supp = support_radius(h);
    return std::isfinite(supp) ? supp : tail_bound(h).cutoff(1e-14, d - 1);
  };
  double Yf = reach(f), Yg = reach(g);
  if (!std::isfinite(Yf) && !std::isfinite(Yg))
    throw Error("convolve_radial: neither factor has an integrable cutoff");
  // Integrate over the factor with the smaller reach.
  const FunctionSpec& a = (Yf <= Yg) ? f : g;
  const FunctionSpec& b = (Yf <= Yg) ? g : f;
  double Y = std::min(Yf, Yg);
  if (d == 1) {
    auto ker = [&](double y) {
      return evaluate(a, y) *
             (evaluate(b, std::abs(x - y)) + evaluate(b, x + y));
    };
    return integrate_adaptive(ker, 0.0, Y, 1e-12, 1e-12, 8000).value;
  }
  double ang_const = sphere_area(d - 1);  // measure of S^{d-2}
  double e = d - 2;
  auto ker = [&](double rho) {
    auto inner = [&](double th) {
      double rr = std::sqrt(std::max(
          x * x + rho * rho - 2.0 * x * rho * std::cos(th), 0.0));
      return evaluate(b, rr) * std::pow(std::sin(th), e);
    };
    double s = 0.0;
    for (int j = 0; j < 4; ++j)
      s += gauss15(inner, kPi * j / 4.0, kPi * (j + 1) / 4.0);
    return evaluate(a, rho) * std::pow(rho, d - 1) * s;
  };
  return ang_const * integrate_adaptive(ker, 0.0, Y, 1e-10, 1e-10, 2000).value;
}

SampledProfile convolve_radial(const FunctionSpec& f, const FunctionSpec& g,
                               std::vector<double> out_grid) {
  if (f.dim != g.dim) throw Error("convolve_radial: dimension mismatch");
  const int d = f.dim;
  double sf = support_radius(f), sg = support_radius(g);
  if (out_grid.empty()) {
    double rmax = (std::isfinite(sf) && std::isfinite(sg)) ? sf + sg : 8.0;
    for (int i = 0; i < 400; ++i) out_grid.push_back(rmax * i / 399.0);
  }
  SampledProfile out;
  out.radii = out_grid;
  out.values.reserve(out_grid.size());

  bool transform_path = has_closed_transform(f) && has_closed_transform(g);
  if (transform_path) {
    FunctionSpec fh = fourier_transform(f);
    FunctionSpec gh = fourier_transform(g);
    // Product spec with combined facts.
    double supp = std::min(support_radius(fh), support_radius(gh));
    TailBound tf = tail_bound(fh), tg = tail_bound(gh);
    TailBound prod;
    if (std::isfinite(supp)) {
      prod = TailBound::zero();
    } else if (tf.kind == TailBound::Gauss || tg.kind == TailBound::Gauss) {
      const TailBound& ga = tf.kind == TailBound::Gauss ? tf : tg;
      const TailBound& ot = tf.kind == TailBound::Gauss ? tg : tf;
      double cap = ot.kind == TailBound::Decay ? ot.c : ot.c;  // coarse
      prod = TailBound::gauss(ga.c * std::max(cap, 1.0), ga.p);
    } else if (tf.kind == TailBound::Decay && tg.kind == TailBound::Decay) {
      prod = TailBound::decay(tf.c * tg.c, tf.p + tg.p);
    } else {
      prod = TailBound::zero();
    }
    if (prod.kind == TailBound::Decay && prod.integral_beyond(8.0, d) == kInf)
      transform_path = false;
    if (transform_path) {
      CustomData pd;
      pd.label = "conv_product";
      FunctionSpec fhc = fh, ghc = gh;
      pd.eval = [fhc, ghc](double t) {
        return evaluate(fhc, t) * evaluate(ghc, t);
      };
      pd.support_radius = supp;
      pd.tail = prod;
      pd.osc_period = std::min(osc_period(fh), osc_period(gh));
      FunctionSpec prod_spec = make_custom(d, std::move(pd));
      for (double x : out_grid)
        out.values.push_back(radial_ft_value(prod_spec, x));
    }
  }
  if (!transform_path) {
    for (double x : out_grid)
      out.values.push_back(convolve_direct_value(f, g, x));
  }
  if (std::isfinite(sf) && std::isfinite(sg) && out_grid.back() >= sf + sg - 1e-12) {
    out.tail = TailBound::zero();
  } else {
    TailBound tf = tail_bound(f), tg = tail_bound(g);
    double l1f = l1_norm(f), l1g = l1_norm(g);
    double p = std::min(tf.kind == TailBound::Zero ? kInf : tf.p,
                        tg.kind == TailBound::Zero ? kInf : tg.p);
    if (!std::isfinite(p)) {
      out.tail = TailBound::zero();
    } else {
      double cf_ = tf.kind == TailBound::Zero ? 0.0 : tf.c;
      double cg_ = tg.kind == TailBound::Zero ? 0.0 : tg.c;
      out.tail = TailBound::decay(std::pow(2.0, p) * (cf_ * l1g + cg_ * l1f), p);
    }
  }
  out.interpolation = SampledProfile::Cubic;
  out.finalize();
  return out;
}

QuadratureResult integrate(const FunctionSpec& f, Weight w, double a,
                           double b) {
  int power = 0;
  if (w == Weight::RadialMeasure) power = f.dim - 1;
  if (w == Weight::SecondMoment) power = f.dim + 1;
  return integrate_weighted(f, power, a, b);
}

SampledProfile sample_on_grid(const FunctionSpec& f,
                              const std::vector<double>& radii,
                              TailBound tail) {
  SampledProfile sp;
  sp.radii = radii;
  for (double r : radii) sp.values.push_back(evaluate(f, r));
  sp.tail = tail;
  sp.interpolation = SampledProfile::Cubic;
  sp.finalize();
  return sp;
}

}  // namespace signlab
