#include "starkdirac/wavefunctions.hpp"

#include "starkdirac/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace starkdirac {

namespace {

using cplx = std::complex<double>;

cplx csqrt(double x) { return std::sqrt(cplx{x, 0.0}); }

void require_bound(const EnergyLevel &level) {
  if (!level.bound())
    throw ConstantsUndefined("wavefunction constants need a Bound level");
}

void require_sym(const EnergyLevel &level, SymmetryKind s) {
  if (level.params.sym != s)
    throw ConstantsUndefined("wavefunction requested for the wrong symmetry");
}

int odd_count(int count) {
  count = std::max(count, 3);
  return count % 2 == 1 ? count : count + 1;
}

template <typename Fn>
RadialFunction sample(RadialKind kind, int n, const SampleGrid &g, bool normalize, Fn &&f) {
  RadialFunction out;
  out.kind = kind;
  out.n = n;
  const int count = odd_count(g.count);
  const double h = (g.r_hi - g.r_lo) / (count - 1);
  out.samples.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double r = (i == count - 1) ? g.r_hi : g.r_lo + i * h;
    out.samples.push_back({r, f(r)});
  }
  out.norm = std::sqrt(l2_norm_squared(out));
  if (normalize && out.norm > 0.0) {
    for (auto &s : out.samples)
      s.value /= out.norm;
    out.normalized = true;
  }
  out.nodes = count_nodes(out.samples);
  return out;
}

} // namespace

std::string to_string(RadialKind k) {
  switch (k) {
  case RadialKind::UpperF: return "F";
  case RadialKind::LowerG: return "G";
  case RadialKind::NonRelR: return "R";
  case RadialKind::PseudoLowerG: return "Gps";
  }
  return "?";
}

ShapeConstants shape_constants(const EnergyLevel &level) {
  require_bound(level);
  const auto &p = level.params;
  ShapeConstants c;
  c.lambda_scale = std::sqrt(p.M * p.omega0);
  c.b = p.q * p.eps / p.omega0;
  c.r0 = c.b / (c.lambda_scale * c.lambda_scale);
  const double w2 = p.M * p.omega0 * p.omega0;
  if (p.sym == SymmetryKind::Spin) {
    c.gamma = p.M + level.E - p.C;
    if (!(c.gamma > 0.0))
      throw ConstantsUndefined("gamma must be positive for the upper spinor");
    c.v = std::sqrt(0.5 * w2 * c.gamma);
    c.eps1 = std::sqrt(c.gamma / (2.0 * p.M));
    c.eps2 = c.gamma / (2.0 * p.M * c.v);
    c.d0 = 1.0 / c.gamma;
  } else {
    c.gamma = p.M - level.E + p.C;
    if (c.gamma == 0.0)
      throw ConstantsUndefined("gamma~ vanishes at this level");
    c.v_tilde = csqrt(0.5 * w2 * c.gamma);
    c.eps1p = csqrt(c.gamma) / (2.0 * p.M);
    c.eps2p = c.gamma / (2.0 * p.M * c.v_tilde);
  }
  return c;
}

double upper_spinor_F(const EnergyLevel &level, double r) {
  require_sym(level, SymmetryKind::Spin);
  const auto c = shape_constants(level);
  const double l2 = c.lambda_scale * c.lambda_scale;
  const double x = l2 * r - c.b;
  return std::exp(-c.eps1 * (0.5 * l2 * r * r - c.b * r)) *
         assoc_laguerre(level.n, 0.0, c.eps2 * x * x);
}

double nr_radial_R(const ModelParams &p, int n, double r) {
  const double lam = std::sqrt(p.M * p.omega0);
  const double x = lam * (r - derived_constants(p).r0);
  const double pref = std::pow(lam * lam / std::numbers::pi, 0.25) /
                      std::sqrt(std::ldexp(std::tgamma(n + 1.0), n));
  return pref * std::exp(-0.5 * x * x) * hermite(n, x);
}

double lower_spinor_G_step(const EnergyLevel &level, double r, double h) {
  if (r < 1e-8)
    throw SingularAtOrigin("lower spinor needs r >= 1e-8 (kappa/r term)");
  const auto c = shape_constants(level);
  const double dF = (upper_spinor_F(level, r + h) - upper_spinor_F(level, r - h)) / (2.0 * h);
  return c.d0 * (dF + level.kappa * upper_spinor_F(level, r) / r);
}

double lower_spinor_G(const EnergyLevel &level, double r) {
  return lower_spinor_G_step(level, r, 1e-6 * std::max(1.0, r));
}

double lower_spinor_G_closed_form(const EnergyLevel &level, double r) {
  if (r < 1e-8)
    throw SingularAtOrigin("lower spinor needs r >= 1e-8 (kappa/r term)");
  require_sym(level, SymmetryKind::Spin);
  const auto c = shape_constants(level);
  const double l2 = c.lambda_scale * c.lambda_scale;
  const double x = l2 * r - c.b;
  const double arg = c.eps2 * x * x;
  const double env = std::exp(-c.eps1 * (0.5 * l2 * r * r - c.b * r));
  const double bracket = (c.eps1 * (c.b - l2 * r) + level.kappa / r) *
                             assoc_laguerre(level.n, 0.0, arg) +
                         2.0 * l2 * c.eps2 * x * assoc_laguerre(level.n, 1.0, arg);
  return c.d0 * env * bracket;
}

std::complex<double> pseudo_lower_G(const EnergyLevel &level, double r) {
  require_sym(level, SymmetryKind::Pseudospin);
  const auto c = shape_constants(level);
  const double l2 = c.lambda_scale * c.lambda_scale;
  const double x = l2 * r - c.b;
  const cplx I{0.0, 1.0};
  const cplx phase = std::exp(I * c.eps1p * (-c.b * r + 0.5 * l2 * r * r));
  return phase * hermite(level.n, -I * c.eps2p * (x * x));
}

SampleGrid default_grid(const ModelParams &p, int count) {
  const double lam = std::sqrt(p.M * p.omega0);
  return {0.0, derived_constants(p).r0 + 20.0 / lam, count};
}

RadialFunction sample_upper_F(const EnergyLevel &level, const SampleGrid &g, bool normalize) {
  return sample(RadialKind::UpperF, level.n, g, normalize,
                [&](double r) { return cplx{upper_spinor_F(level, r), 0.0}; });
}

RadialFunction sample_lower_G(const EnergyLevel &level, const SampleGrid &g, bool normalize) {
  SampleGrid gg = g;
  gg.r_lo = std::max(gg.r_lo, 1e-8);
  return sample(RadialKind::LowerG, level.n, gg, normalize,
                [&](double r) { return cplx{lower_spinor_G(level, r), 0.0}; });
}

RadialFunction sample_nr_R(const ModelParams &p, int n, const SampleGrid &g, bool normalize) {
  return sample(RadialKind::NonRelR, n, g, normalize,
                [&](double r) { return cplx{nr_radial_R(p, n, r), 0.0}; });
}

RadialFunction sample_pseudo_G(const EnergyLevel &level, const SampleGrid &g, bool normalize) {
  return sample(RadialKind::PseudoLowerG, level.n, g, normalize,
                [&](double r) { return pseudo_lower_G(level, r); });
}

double l2_norm_squared(const RadialFunction &f) {
  if (f.samples.size() < 2)
    return 0.0;
  std::vector<double> y;
  y.reserve(f.samples.size());
  for (const auto &s : f.samples)
    y.push_back(std::norm(s.value));
  const double h = (f.samples.back().r - f.samples.front().r) / (f.samples.size() - 1);
  return simpson(y, h);
}

int count_nodes(const std::vector<RadialSample> &s) {
  int nodes = 0;
  int last = 0;
  for (const auto &x : s) {
    const double v = x.value.real();
    const int sg = (v > 0.0) - (v < 0.0);
    if (sg == 0)
      continue;
    if (last != 0 && sg != last)
      ++nodes;
    last = sg;
  }
  return nodes;
}

double boundary_defect(const RadialFunction &f) {
  double mx = 0.0;
  for (const auto &s : f.samples)
    mx = std::max(mx, std::abs(s.value));
  if (mx == 0.0 || f.samples.empty())
    return 0.0;
  return std::abs(f.samples.front().value) / mx;
}

double mean_radius(const RadialFunction &f) {
  if (f.samples.size() < 2)
    return 0.0;
  std::vector<double> w, rw;
  for (const auto &s : f.samples) {
    w.push_back(std::norm(s.value));
    rw.push_back(s.r * std::norm(s.value));
  }
  const double h = (f.samples.back().r - f.samples.front().r) / (f.samples.size() - 1);
  return simpson(rw, h) / simpson(w, h);
}

double realness_defect(const RadialFunction &f) {
  cplx peak{0.0, 0.0};
  for (const auto &s : f.samples)
    if (std::abs(s.value) > std::abs(peak))
      peak = s.value;
  if (std::abs(peak) == 0.0)
    return 0.0;
  const cplx rot = std::conj(peak) / std::abs(peak);
  double worst = 0.0;
  for (const auto &s : f.samples)
    worst = std::max(worst, std::abs((s.value * rot).imag()));
  return worst / std::abs(peak);
}

std::vector<GDeviation> g_deviation_profile(const EnergyLevel &level, double r_lo,
                                            double r_hi, int count) {
  std::vector<GDeviation> out;
  count = std::max(count, 2);
  const double step = (r_hi - r_lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    const double r = r_lo + i * step;
    const double h = 1e-6 * std::max(1.0, r);
    GDeviation d;
    d.r = r;
    d.numeric = lower_spinor_G(level, r);
    d.closed_form = lower_spinor_G_closed_form(level, r);
    const double scale = std::max(std::abs(d.numeric), 1e-300);
    d.rel_deviation = std::abs(d.closed_form - d.numeric) / scale;
    const double half = lower_spinor_G_step(level, r, 0.5 * h);
    d.richardson_gap = std::abs(lower_spinor_G_step(level, r, h) - half);
    out.push_back(d);
  }
  return out;
}

} // namespace starkdirac
