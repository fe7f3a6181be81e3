#include "starkdirac/model.hpp"

#include <cmath>

namespace starkdirac {

std::string to_string(SymmetryKind s) {
  return s == SymmetryKind::Spin ? "spin" : "pseudospin";
}

SymmetryKind symmetry_from_string(const std::string &name) {
  if (name == "spin")
    return SymmetryKind::Spin;
  if (name == "pseudospin")
    return SymmetryKind::Pseudospin;
  throw InvalidParams("unknown symmetry '" + name + "' (expected spin|pseudospin)");
}

void ModelParams::validate() const {
  if (!std::isfinite(M) || !std::isfinite(omega0) || !std::isfinite(q) ||
      !std::isfinite(eps) || !std::isfinite(C))
    throw InvalidParams("model parameters must be finite");
  if (!(M > 0.0))
    throw InvalidParams("M must be positive");
  if (!(omega0 > 0.0))
    throw InvalidParams("omega0 must be positive");
  if (eps < 0.0)
    throw InvalidParams("eps must be non-negative");
  if (q == 0.0 && eps != 0.0)
    throw InvalidParams("q must be nonzero when eps is nonzero");
}

DerivedConstants derived_constants(const ModelParams &p) {
  const double k = p.M * p.omega0 * p.omega0;
  const double qe = p.q * p.eps;
  DerivedConstants d;
  d.g_shift = qe * qe / (2.0 * k);
  d.r0 = qe / k;
  d.g_eps = d.g_shift - p.M;
  d.M_s = p.M - p.C;
  return d;
}

double eval_potential(const ModelParams &p, double r) {
  return 0.5 * p.M * p.omega0 * p.omega0 * r * r - p.q * p.eps * r;
}

double eval_potential_completed_square(const ModelParams &p, double r) {
  const auto d = derived_constants(p);
  const double x = r - d.r0;
  return 0.5 * p.M * p.omega0 * p.omega0 * x * x - d.g_shift;
}

std::vector<CurvePoint> potential_curve(const ModelParams &p, double r_max,
                                        int samples) {
  if (!(r_max > 0.0))
    throw InvalidParams("r_max must be positive");
  if (samples < 2)
    throw InvalidParams("samples must be at least 2");
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  const double h = r_max / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const double r = (i == samples - 1) ? r_max : i * h;
    out.push_back({r, eval_potential(p, r)});
  }
  return out;
}

} // namespace starkdirac
