#include "signlab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace signlab {

namespace {

std::string fmt_inputs(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [k, v] : kv) {
    if (!first) os << ", ";
    os << '"' << k << "\": " << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

QuadratureResult second_moment_q(const FunctionSpec& f) {
  int d = f.dim;
  TailBound tb = tail_bound(f);
  if (!std::isfinite(support_radius(f)) &&
      tb.integral_beyond(16.0, d + 1) == kInf)
    throw Error("second_moment: divergent second moment "
                "(hypotheses of the second-moment lemma fail)");
  QuadratureResult q = integrate_weighted(f, d + 1, 0.0, kInf);
  q.value *= sphere_area(d);
  q.error_estimate *= sphere_area(d);
  return q;
}

double second_moment(const FunctionSpec& f) { return second_moment_q(f).value; }

double lemma_two_bound(double r, double x) {
  if (!(r >= 0.25 - 1e-12) || !(r <= 1.0 / std::sqrt(2.0) + 1e-12))
    throw Error("lemma_two_bound: r outside [1/4, 1/sqrt 2]");
  if (!(x >= 0.0) || !(x <= r + 1e-12))
    throw Error("lemma_two_bound: x outside [0, r]");
  // [sin(2 pi (r-1/4) x) - sin(2 pi r x)]/(pi x) -> 2(r - 1/4) - 2r = -1/2
  if (x < 1e-9) return 0.0;
  return 0.5 + (std::sin(2.0 * kPi * (r - 0.25) * x) -
                std::sin(2.0 * kPi * r * x)) / (kPi * x);
}

double phi(double r) {
  if (!(r >= 0.25)) throw Error("phi: r must be >= 1/4");
  if (r == 0.25) return 0.0;
  auto f = [r](double x) {
    return 0.5 + (std::sin(2.0 * kPi * (r - 0.25) * x) -
                  std::sin(2.0 * kPi * r * x)) / (kPi * x);
  };
  return integrate_adaptive(f, 0.25, r, 1e-12, 1e-12).value;
}

CertificateResult import_inequality(double r, double sigma) {
  if (!(r > 0.0) || !(sigma >= 0.0))
    throw Error("import_inequality: need r > 0, sigma >= 0");
  CertificateResult out;
  out.name = "import_inequality";
  out.margin = (r + 0.25) * sigma * (r + 0.25 - sigma) - r / 8.0;
  out.passed = out.margin >= 0.0;
  out.inputs = fmt_inputs({{"r", r}, {"sigma", sigma}});
  return out;
}

CertificateResult step1_contradiction(double r_low, double r_high,
                                      double sigma_bound) {
  if (!(0.25 <= r_low) || !(r_low <= r_high) ||
      !(r_high <= 1.0 / std::sqrt(2.0) + 1e-12))
    throw Error("step1_contradiction: inconsistent radius window");
  CertificateResult out;
  out.name = "step1_contradiction";
  out.inputs = fmt_inputs(
      {{"r_low", r_low}, {"r_high", r_high}, {"sigma_bound", sigma_bound}});
  double phi_slack = sigma_bound - phi(r_high);
  // sigma-monotonicity of the import margin makes the single bound sufficient
  double worst_import = kInf;
  for (double r = r_low; r <= r_high + 1e-12; r += 1e-3)
    worst_import = std::min(worst_import,
                            -import_inequality(std::min(r, r_high),
                                               sigma_bound).margin);
  out.margin = std::min(phi_slack, worst_import);
  out.passed = out.margin > 0.0;
  std::ostringstream os;
  os << "phi slack " << phi_slack << ", min grid import deficit "
     << worst_import;
  out.notes = os.str();
  return out;
}

std::pair<double, double> bathtub_radii(int d, double r) {
  if (d < 1) throw Error("bathtub_radii: dimension must be >= 1");
  double nu = ball_volume(d);
  double half = 1.0 / (2.0 * nu);
  double rd = std::pow(r, d);
  if (!(rd > half))
    throw Error("bathtub_radii: half-mass shell does not fit inside B_r");
  return {std::pow(rd - half, 1.0 / d), std::pow(rd + half, 1.0 / d)};
}

BathtubResult bathtub_minimize(const std::vector<double>& radii,
                               const std::vector<double>& values, int dim,
                               double G) {
  if (radii.size() < 2 || values.size() + 1 != radii.size())
    throw Error("bathtub_minimize: need n+1 radii for n shell costs");
  if (!(G > 0.0)) throw Error("bathtub_minimize: G must be positive");
  const size_t n = values.size();
  std::vector<double> measure(n);
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (!(radii[i + 1] > radii[i]))
      throw Error("bathtub_minimize: radii must increase");
    measure[i] = ball_volume(dim) *
                 (std::pow(radii[i + 1], dim) - std::pow(radii[i], dim));
    total += measure[i];
  }
  if (G > total + 1e-12)
    throw Error("bathtub_minimize: G exceeds the available measure");

  // fill sublevel sets of h in increasing cost order
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  BathtubResult out;
  out.g.assign(n, 0.0);
  double remaining = G;
  size_t i = 0;
  while (i < n && remaining > 1e-14) {
    // gather the whole level set at this cost (ties share the fraction c)
    size_t j = i;
    double level_measure = 0.0;
    while (j < n && values[order[j]] == values[order[i]])
      level_measure += measure[order[j++]];
    out.threshold = values[order[i]];
    if (level_measure <= remaining) {
      for (size_t k = i; k < j; ++k) out.g[order[k]] = 1.0;
      out.fraction = 1.0;
      remaining -= level_measure;
    } else {
      out.fraction = remaining / level_measure;
      for (size_t k = i; k < j; ++k) out.g[order[k]] = out.fraction;
      remaining = 0.0;
    }
    i = j;
  }
  return out;
}

CertificateResult convexity_gap(int d, double r) {
  auto [s, t] = bathtub_radii(d, r);
  CertificateResult out;
  out.name = "convexity_gap";
  out.inputs = fmt_inputs({{"d", (double)d}, {"r", r}});
  double nu = ball_volume(d);
  out.margin = nu * d / (d + 2.0) *
               (std::pow(t, d + 2) + std::pow(s, d + 2) -
                2.0 * std::pow(r, d + 2));
  out.passed = out.margin > 0.0;
  return out;
}

std::pair<double, double> improvement_factor(int d, double A_plus) {
  if (d < 1) throw Error("improvement_factor: dimension must be >= 1");
  double theta = 1.0 / (2.0 * ball_volume(d) * std::pow(A_plus, d));
  if (!(theta < 1.0))
    throw Error("improvement_factor: requires 2 nu_d A^d > 1");
  double factor = 1.0 + std::pow(1.0 - theta, 1.0 / d);
  if (factor > 2.0 - theta / d + 1e-12)
    throw Error("improvement_factor: convexity bound violated (internal)");
  return {theta, factor};
}

}  // namespace signlab
