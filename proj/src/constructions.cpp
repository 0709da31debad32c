#include "signlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "signlab/special.hpp"
#include "signlab/transforms.hpp"

namespace signlab {

namespace {

// Sum bound for |f| + |g|: keep the weakest kind, sum the constants.
TailBound combine_tails(const TailBound& a, const TailBound& b) {
  if (a.kind == TailBound::Zero) return b;
  if (b.kind == TailBound::Zero) return a;
  if (a.kind == TailBound::Decay || b.kind == TailBound::Decay) {
    // Gaussian pieces are dominated by any power bound past the engines'
    // r >= 8 working region; fold their constants in.
    double p = kInf;
    if (a.kind == TailBound::Decay) p = std::min(p, a.p);
    if (b.kind == TailBound::Decay) p = std::min(p, b.p);
    return TailBound::decay(a.c + b.c, p);
  }
  return TailBound::gauss(a.c + b.c, std::min(a.p, b.p));
}

// Radial FT at a single radius of a compactly supported profile (quadrature
// over [0, R] only; interval budget scales with the oscillation count).
double compact_radial_ft(const std::function<double(double)>& f, double R,
                         int d, double x) {
  int budget = 400 + (int)(8.0 * R * x);
  if (x < 1e-12) {
    auto g = [&](double r) { return std::pow(r, d - 1) * f(r); };
    return sphere_area(d) * integrate_adaptive(g, 0.0, R, 1e-11, 1e-11).value;
  }
  if (d == 1) {
    auto g = [&](double r) { return f(r) * std::cos(2.0 * kPi * x * r); };
    return 2.0 * integrate_adaptive(g, 0.0, R, 1e-11, 1e-11, budget).value;
  }
  double nu = 0.5 * d - 1.0;
  auto g = [&](double r) {
    return f(r) * bessel_j(nu, 2.0 * kPi * r * x) * std::pow(r, 0.5 * d);
  };
  return 2.0 * kPi * std::pow(x, 1.0 - 0.5 * d) *
         integrate_adaptive(g, 0.0, R, 1e-11, 1e-11, budget).value;
}

// ------------------------------------------------------------ bump mollifier
//
// psi_bump(x) = c exp(-1/(1-x^2)) on (-1,1), c fixed by ||psi||_{L2(R^d)} = 1.
// phi = psi * psi (support radius 2, phi >= 0); FT(phi) = FT(psi)^2 >= 0.

struct MollifierTables {
  Spline phi;          // phi on [0,2]
  Spline psi_hat;      // FT(psi_bump) on [0, 64]; ~0 beyond
  double phi_l1 = 0.0; // int_{R^d} phi
};

double bump_raw(double x) {
  double u = 1.0 - x * x;
  return u > 1e-14 ? std::exp(-1.0 / u) : 0.0;
}

const MollifierTables& mollifier_tables(int d) {
  static std::map<int, MollifierTables> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  auto sq = [&](double r) { return std::pow(r, d - 1) * bump_raw(r) * bump_raw(r); };
  double l2sq = sphere_area(d) * integrate_adaptive(sq, 0.0, 1.0, 1e-13, 1e-13).value;
  double c = 1.0 / std::sqrt(l2sq);
  auto psi = [&](double r) { return c * bump_raw(r); };

  MollifierTables t;
  // phi = psi * psi by direct convolution (reflection formula in d=1,
  // angular quadrature otherwise via convolve_direct_value)
  CustomData pd;
  pd.label = "bump";
  pd.eval = psi;
  pd.support_radius = 1.0;
  pd.tail = TailBound::zero();
  FunctionSpec psi_spec = make_custom(d, pd);
  std::vector<double> xs, ys;
  const int n = 256;
  for (int i = 0; i <= n; ++i) {
    double x = 2.0 * i / n;
    xs.push_back(x);
    ys.push_back(i == n ? 0.0 : convolve_direct_value(psi_spec, psi_spec, x));
  }
  t.phi = Spline(xs, ys);
  auto phir = [&](double r) { return std::pow(r, d - 1) * t.phi(r); };
  t.phi_l1 = sphere_area(d) * integrate_adaptive(phir, 0.0, 2.0, 1e-12, 1e-12).value;

  std::vector<double> fs, fy;
  const int m = 1024;
  for (int i = 0; i <= m; ++i) {
    double xi = 64.0 * i / m;
    fs.push_back(xi);
    fy.push_back(compact_radial_ft(psi, 1.0, d, xi));
  }
  t.psi_hat = Spline(fs, fy);
  return cache.emplace(d, std::move(t)).first->second;
}

double phi_at(int d, double r) {
  r = std::abs(r);
  return r >= 2.0 ? 0.0 : mollifier_tables(d).phi(r);
}

// FT(phi) = psi_hat^2: exactly nonnegative by construction.
double phi_hat_at(int d, double xi) {
  xi = std::abs(xi);
  if (xi >= 64.0) return 0.0;
  double v = mollifier_tables(d).psi_hat(xi);
  return v * v;
}

}  // namespace

DiracComb symmetric_comb(double x0) {
  if (!(x0 > 0.0)) throw Error("symmetric_comb: x0 must be positive");
  return {{{x0, 1.0}, {-x0, 1.0}, {0.0, 2.0}}};
}

FunctionSpec dirac_symmetrize(const FunctionSpec& f, double x0) {
  if (!(x0 > 0.0)) throw Error("dirac_symmetrize: x0 must be positive");
  if (f.dim != 1)
    throw Error("dirac_symmetrize: one-dimensional only (shifted radial "
                "profiles are not radial in d > 1)");
  const FunctionSpec inner = f;
  const FunctionSpec tf = fourier_transform(f);
  CustomData g;
  g.label = "dirac_symmetrize";
  g.eval = [inner, x0](double x) {
    return evaluate(inner, x - x0) + evaluate(inner, x + x0) +
           2.0 * evaluate(inner, x);
  };
  g.ft_eval = [tf, x0](double xi) {
    return (2.0 * std::cos(2.0 * kPi * x0 * xi) + 2.0) * evaluate(tf, xi);
  };
  double S = support_radius(f);
  g.support_radius = std::isfinite(S) ? S + x0 : kInf;
  TailBound tb = tail_bound(f);
  switch (tb.kind) {
    case TailBound::Zero: g.tail = tb; break;
    case TailBound::Decay:
      // f(x -+ x0) <= c (x/2)^{-p} once x >= 2 x0
      g.tail = TailBound::decay(tb.c * (std::pow(2.0, tb.p) + 3.0), tb.p);
      break;
    case TailBound::Gauss:
      g.tail = TailBound::gauss(4.0 * tb.c, 0.5 * tb.p);
      break;
  }
  double nb = nonneg_beyond(f);
  g.nonneg_beyond = std::isnan(nb) ? kNaN : nb + x0;
  g.osc_period = osc_period(f);
  g.band_radius = band_radius(f);
  g.ft_nonneg_beyond = nonneg_beyond(tf);
  g.ft_tail_known = true;
  TailBound ft = tail_bound(tf);
  ft.c *= 4.0;  // |2 cos + 2| <= 4
  g.ft_tail = ft;
  g.ft_osc_period = osc_period(tf);
  return make_custom(1, std::move(g));
}

FunctionSpec gaussian_correct(const FunctionSpec& g) {
  const FunctionSpec inner = g;
  const FunctionSpec tg = fourier_transform(g);
  double g0 = evaluate(g, 0.0), gh0 = evaluate(tg, 0.0);
  if (!(g0 + gh0 < 0.0))
    throw Error("gaussian_correct: correction not applicable "
                "(g(0) + ghat(0) >= 0)");
  double coef = 0.5 * (g0 + gh0);
  CustomData h;
  h.label = "gaussian_correct";
  auto val = [inner, tg, coef](double x) {
    return evaluate(inner, x) + evaluate(tg, x) -
           coef * std::exp(-kPi * x * x);
  };
  h.eval = val;
  h.ft_eval = val;  // ghat + g - coef gaussian: self-dual by construction
  h.tail = combine_tails(combine_tails(tail_bound(g), tail_bound(tg)),
                         TailBound::gauss(std::abs(coef), 1.0));
  h.osc_period = (double)find_block({osc_period(g), osc_period(tg)}, 64);
  h.ft_osc_period = h.osc_period;
  h.ft_tail_known = true;
  h.ft_tail = h.tail;
  return make_custom(g.dim, std::move(h));
}

EtaResult build_eta(int d) {
  if (d < 1) throw Error("build_eta: dimension must be >= 1");
  FunctionSpec chi = make_closed_form(CFKind::IndicatorBallAutocorr, d);
  FunctionSpec chh = make_closed_form(CFKind::ChiHat, d);
  auto p = [chi, chh](double r) {
    r = std::abs(r);
    return r >= 2.0 ? 0.0 : evaluate(chi, r) * evaluate(chh, r);
  };
  auto phi_live = [p, d](double x) { return compact_radial_ft(p, 2.0, d, x); };

  // psi = phi + p tabulated on [0, 16]; live quadrature past the table
  const double x_tab = 16.0;
  const int n_tab = 1024;
  std::vector<double> xs(n_tab + 1), ys(n_tab + 1);
  for (int i = 0; i <= n_tab; ++i) {
    xs[i] = x_tab * i / n_tab;
    ys[i] = phi_live(xs[i]) + p(xs[i]);
  }
  auto psi_tab = std::make_shared<Spline>(xs, ys);
  double psi0 = ys[0];
  auto psi = [psi_tab, phi_live, p, x_tab](double x) {
    x = std::abs(x);
    return x <= x_tab ? (*psi_tab)(x) : phi_live(x) + p(x);
  };

  // A = min of q(x) = x^{d+1} (psi - 2 psi(0) exp(-pi x^2)) on a log grid
  const double r0 = 2.5;
  const double grid_max = d == 1 ? 1e3 : 40.0;
  const int n_grid = 48;
  double A = kInf, qmax = 0.0;
  for (int i = 0; i <= n_grid; ++i) {
    double x = r0 * std::pow(grid_max / r0, (double)i / n_grid);
    double q = std::pow(x, d + 1) *
               (psi(x) - 2.0 * psi0 * std::exp(-kPi * x * x));
    A = std::min(A, q);
    qmax = std::max(qmax, q);
  }
  if (!(A > 0.0))
    throw Error("build_eta: growth constant nonpositive on the verification "
                "window");

  CustomData e;
  e.label = "eta";
  auto val = [psi, psi0, A](double x) {
    return (psi(x) - 2.0 * psi0 * std::exp(-kPi * x * x)) / A;
  };
  e.eval = val;
  e.ft_eval = val;  // psi and the Gaussian are both self-dual
  e.tail = TailBound::decay(2.0 * qmax / A, d + 1.0);
  e.nonneg_beyond = r0;  // grid-verified growth, not rigorous
  e.osc_period = 0.5;    // oscillation set by the support boundary of p
  e.ft_tail_known = true;
  e.ft_tail = e.tail;
  e.ft_nonneg_beyond = r0;
  e.ft_osc_period = 0.5;
  EtaResult out;
  out.eta = make_custom(d, std::move(e));
  out.A = A;
  out.r0 = r0;
  out.grid_max = grid_max;
  return out;
}

FunctionSpec mollify_bandlimit(const FunctionSpec& f, double delta) {
  if (!(delta > 0.0)) throw Error("mollify_bandlimit: delta must be positive");
  const int d = f.dim;
  mollifier_tables(d);  // build before capture
  const FunctionSpec tf = fourier_transform(f);
  const double band = 2.0 / delta;
  auto ghat = [tf, delta, d](double xi) {
    xi = std::abs(xi);
    double w = phi_at(d, delta * xi);
    return w == 0.0 ? 0.0 : evaluate(tf, xi) * w;
  };
  CustomData g;
  g.label = "mollify_bandlimit";
  g.ft_eval = ghat;
  g.eval = [ghat, band, d](double x) {
    return compact_radial_ft(ghat, band, d, x);
  };
  g.band_radius = band;
  g.ft_tail_known = true;
  g.ft_tail = TailBound::zero();
  g.ft_nonneg_beyond = nonneg_beyond(tf);  // phi_delta >= 0 preserves signs
  g.ft_osc_period = osc_period(tf);
  // bandlimited smoothing of an integrable f: calibrate a quartic power bound
  double c = 1e-300;
  for (double x : {8.0, 12.0, 16.0})
    c = std::max(c, 2.0 * std::abs(g.eval(x)) * std::pow(x, 4.0));
  g.tail = TailBound::decay(c, 4.0);
  g.osc_period = std::max(1.0 / band, 1.0 / 128.0);
  return make_custom(d, std::move(g));
}

FunctionSpec schwartz_smooth(const FunctionSpec& f, double delta) {
  if (!(delta > 0.0)) throw Error("schwartz_smooth: delta must be positive");
  if (f.dim != 1) throw Error("schwartz_smooth: one-dimensional in v1");
  const int d = 1;
  mollifier_tables(d);
  const FunctionSpec inner = f;
  // phi_delta = phi(./delta) (support 2 delta); FT(phi_delta) = delta phihat(delta .)
  auto conv = [inner, delta, d](const std::function<double(double)>& q,
                                double x) {
    auto k = [&](double t) {
      return q(std::abs(t)) * phi_at(d, (x - t) / delta) / delta;
    };
    return integrate_adaptive(k, x - 2.0 * delta, x + 2.0 * delta, 1e-12,
                              1e-12).value;
  };
  auto f_eval = [inner](double t) { return evaluate(inner, t); };
  auto f_phihat = [inner, delta, d](double t) {
    return evaluate(inner, t) * delta * phi_hat_at(d, delta * t);
  };
  auto hval = [conv, f_eval, f_phihat, delta, d](double x) {
    x = std::abs(x);
    return conv(f_phihat, x) + conv(f_eval, x) * delta * phi_hat_at(d, delta * x);
  };
  double t1 = conv(f_phihat, 0.0);
  double t2 = conv(f_eval, 0.0) * delta * phi_hat_at(d, 0.0);
  if (!(t1 + t2 < 0.0)) {
    std::ostringstream os;
    os << "schwartz_smooth: h(0) = " << t1 + t2
       << " not negative (summands " << t1 << ", " << t2
       << "); shrink delta";
    throw Error(os.str());
  }
  CustomData h;
  h.label = "schwartz_smooth";
  h.eval = hval;
  h.ft_eval = hval;  // hhat = h when fhat = f (caller-certified)
  double nb = nonneg_beyond(f);
  h.nonneg_beyond = std::isnan(nb) ? kNaN : nb + 2.0 * delta;
  TailBound tb = tail_bound(f);
  double scale =
      2.0 * mollifier_tables(d).phi_l1 * delta * phi_hat_at(d, 0.0) + 1e-300;
  switch (tb.kind) {
    case TailBound::Zero: h.tail = tb; break;
    case TailBound::Decay:
      h.tail = TailBound::decay(1.1 * tb.c * std::pow(2.0, tb.p) * scale, tb.p);
      break;
    case TailBound::Gauss:
      h.tail = TailBound::gauss(1.1 * tb.c * scale, 0.5 * tb.p);
      break;
  }
  h.osc_period = osc_period(f);
  h.ft_tail_known = true;
  h.ft_tail = h.tail;
  h.ft_nonneg_beyond = h.nonneg_beyond;
  h.ft_osc_period = h.osc_period;
  return make_custom(d, std::move(h));
}

FunctionSpec eigen_symmetrize(const FunctionSpec& f, int s) {
  if (s != 1 && s != -1) throw Error("eigen_symmetrize: s must be +-1");
  if (auto* e = std::get_if<EigenExpansion>(&f.rep)) {
    // already an eigenfunction: fhat + s f is 2f or 0
    FunctionSpec out = f;
    auto& oe = std::get<EigenExpansion>(out.rep);
    double m = e->sign == s ? 2.0 : 0.0;
    for (double& c : oe.coeffs) c *= m;
    oe.sign = s;
    return out;
  }
  const FunctionSpec inner = f;
  const FunctionSpec tf = fourier_transform(f);
  CustomData F;
  F.label = "eigen_symmetrize";
  auto val = [inner, tf, s](double x) {
    return evaluate(tf, x) + s * evaluate(inner, x);
  };
  F.eval = val;
  F.ft_eval = [val, s](double xi) { return s * val(xi); };
  double S = std::max(support_radius(f), band_radius(f));
  F.support_radius = S;
  F.band_radius = S;  // Fhat = s F
  F.tail = combine_tails(tail_bound(f), tail_bound(tf));
  F.osc_period = (double)find_block({osc_period(f), osc_period(tf)}, 64);
  F.ft_tail_known = true;
  F.ft_tail = F.tail;
  F.ft_osc_period = F.osc_period;
  return make_custom(f.dim, std::move(F));
}

}  // namespace signlab
