#include "starkdirac/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace starkdirac {

namespace {

using cplx = std::complex<double>;

// Roots of E^2 + b E + c with complex coefficients.
std::array<cplx, 2> quadratic_roots(cplx b, cplx c) {
  const cplx disc = std::sqrt(b * b - 4.0 * c);
  const cplx q = -0.5 * (b + (std::real(std::conj(b) * disc) >= 0.0 ? disc : -disc));
  if (std::abs(q) == 0.0)
    return {cplx{0.0, 0.0}, cplx{0.0, 0.0}};
  return {q, c / q};
}

// Remaining two roots of y^3 + d y + e once a real root t is known.
std::array<cplx, 2> deflate_depressed(double t, double d) {
  return quadratic_roots(cplx{t, 0.0}, cplx{t * t + d, 0.0});
}

void check_leading(const Cubic &c) {
  if (c.A == 0.0 || !std::isfinite(c.A))
    throw DegenerateCubic("leading coefficient of the cubic is zero");
}

CubicSolution frame(const Cubic &c, CubicMethod m) {
  const auto dep = depress(c);
  CubicSolution s;
  s.d = dep.d;
  s.e = dep.e;
  s.p = dep.p;
  s.cardano_real = dep.e * dep.e >= 4.0 * dep.p;
  s.method = m;
  return s;
}

void shift_back(CubicSolution &s, const Cubic &c, const std::array<cplx, 3> &y) {
  const double shift = c.B / (3.0 * c.A);
  for (int i = 0; i < 3; ++i)
    s.roots[i] = y[i] - shift;
}

std::array<cplx, 3> trigonometric_depressed(double d, double e, bool three_real) {
  if (three_real) {
    // d < 0 here
    const double m = 2.0 * std::sqrt(-d / 3.0);
    const double arg = std::clamp(3.0 * e / (2.0 * d) * std::sqrt(-3.0 / d), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    std::array<cplx, 3> y;
    for (int k = 0; k < 3; ++k)
      y[k] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
    return y;
  }
  double t;
  if (d < 0.0) {
    const double arg = -3.0 * std::abs(e) / (2.0 * d) * std::sqrt(-3.0 / d);
    t = -2.0 * std::copysign(1.0, e) * std::sqrt(-d / 3.0) * std::cosh(std::acosh(std::max(arg, 1.0)) / 3.0);
  } else if (d > 0.0) {
    const double arg = 3.0 * e / (2.0 * d) * std::sqrt(3.0 / d);
    t = -2.0 * std::sqrt(d / 3.0) * std::sinh(std::asinh(arg) / 3.0);
  } else {
    t = std::cbrt(-e);
  }
  const auto rest = deflate_depressed(t, d);
  return {cplx{t, 0.0}, rest[0], rest[1]};
}

std::array<cplx, 3> cardano_complex_depressed(double d, double e) {
  const cplx disc = std::sqrt(cplx{e * e + 4.0 * (d / 3.0) * (d / 3.0) * (d / 3.0), 0.0});
  // pick the sign giving the larger |z^3| to avoid cancellation
  const cplx w1 = -0.5 * e + 0.5 * disc;
  const cplx w2 = -0.5 * e - 0.5 * disc;
  const cplx w = std::abs(w1) >= std::abs(w2) ? w1 : w2;
  if (std::abs(w) == 0.0)
    return {cplx{}, cplx{}, cplx{}};
  const cplx z0 = std::pow(w, 1.0 / 3.0);
  const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::array<cplx, 3> y;
  cplx z = z0;
  for (int k = 0; k < 3; ++k) {
    y[k] = z - d / (3.0 * z);
    z *= omega;
  }
  return y;
}

void polish(CubicSolution &s, const Cubic &c) {
  const Cubic dc{0.0, 3.0 * c.A, 2.0 * c.B, c.C};
  for (auto &r : s.roots) {
    const bool real = r.imag() == 0.0;
    for (int it = 0; it < 4; ++it) {
      const cplx f = c(r);
      const cplx fp = dc(r);
      if (std::abs(fp) == 0.0 || std::abs(f) == 0.0)
        break;
      cplx cand = r - f / fp;
      if (real)
        cand = {cand.real(), 0.0};
      if (std::abs(c(cand)) < std::abs(f))
        r = cand;
      else
        break;
    }
  }
}

} // namespace

std::string to_string(CubicMethod m) {
  return m == CubicMethod::CardanoA7 ? "cardano" : "trigonometric";
}

std::vector<double> CubicSolution::real_roots(double tol) const {
  std::vector<double> out;
  for (const auto &r : roots)
    if (std::abs(r.imag()) <= tol * std::max(1.0, std::abs(r.real())))
      out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

DepressedCubic depress(const Cubic &c) {
  check_leading(c);
  const double A = c.A, B = c.B, C = c.C, D = c.D;
  DepressedCubic dep;
  dep.d = C / A - B * B / (3.0 * A * A);
  dep.e = D / A + B * (2.0 * B * B - 9.0 * A * C) / (27.0 * A * A * A);
  const double third = dep.d / 3.0;
  dep.p = -third * third * third;
  return dep;
}

CubicSolution solve_cubic(const Cubic &c) {
  check_leading(c);
  CubicSolution s = frame(c, CubicMethod::CardanoA7);
  std::array<cplx, 3> y;
  if (s.cardano_real) {
    const double sq = std::sqrt(s.e * s.e - 4.0 * s.p);
    const double w = -0.5 * s.e - std::copysign(0.5 * sq, s.e);
    const double z = std::cbrt(w);
    const double t = (z == 0.0) ? std::cbrt(-s.e) : z - s.d / (3.0 * z);
    const auto rest = deflate_depressed(t, s.d);
    y = {cplx{t, 0.0}, rest[0], rest[1]};
  } else {
    s.method = CubicMethod::Trigonometric;
    y = trigonometric_depressed(s.d, s.e, true);
  }
  shift_back(s, c, y);
  polish(s, c);
  return s;
}

CubicSolution solve_cubic_with(const Cubic &c, CubicMethod method) {
  check_leading(c);
  CubicSolution s = frame(c, method);
  const auto y = method == CubicMethod::CardanoA7
                     ? cardano_complex_depressed(s.d, s.e)
                     : trigonometric_depressed(s.d, s.e, !s.cardano_real);
  shift_back(s, c, y);
  return s;
}

} // namespace starkdirac
