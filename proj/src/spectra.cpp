#include "starkdirac/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace starkdirac {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBoundaryTol = 1e-12;
constexpr double kResidualAccept = 1e-6;

double real_tolerance(std::complex<double> z) {
  return 1e-10 * std::max(1.0, std::abs(z.real()));
}

LevelDiagnostics diagnostics_at(const ModelParams &p, double E) {
  LevelDiagnostics d;
  const double w2 = p.M * p.omega0 * p.omega0;
  d.g_shift = derived_constants(p).g_shift;
  if (p.sym == SymmetryKind::Spin) {
    d.gamma = p.M + E - p.C;
    d.alpha = d.gamma * (p.M - E);
  } else {
    d.gamma = p.M - E + p.C;
    d.alpha = d.gamma * (p.M + E);
  }
  d.v2 = 0.5 * w2 * d.gamma;
  d.beta = p.q * p.eps * d.gamma;
  return d;
}

} // namespace

double oscillator_rhs(const ModelParams &p, int n) {
  const double h = n + 0.5;
  return 2.0 * p.M * p.omega0 * p.omega0 * h * h;
}

Cubic spin_cubic(double M, double C_s, double g_shift, double rhs) {
  const double g = g_shift - M;
  const double Ms = M - C_s;
  return {1.0, Ms + 2.0 * g, g * (g + 2.0 * Ms), g * g * Ms - rhs};
}

Cubic pseudospin_cubic(double M, double C_ps, double g_shift, double rhs) {
  // (E - a)(E + b)^2 - rhs
  const double a = M + C_ps;
  const double b = M + g_shift;
  return {1.0, 2.0 * b - a, b * b - 2.0 * a * b, -a * b * b - rhs};
}

Cubic reflect(const Cubic &c) { return {c.A, -c.B, c.C, -c.D}; }

CubicCoefficients cubic_coefficients(const ModelParams &p, int n) {
  p.validate();
  const double gs = derived_constants(p).g_shift;
  const double rhs = oscillator_rhs(p, n);
  CubicCoefficients c;
  c.sym = p.sym;
  c.n = n;
  c.params = p;
  c.poly = p.sym == SymmetryKind::Spin ? spin_cubic(p.M, p.C, gs, rhs)
                                       : pseudospin_cubic(p.M, p.C, gs, rhs);
  return c;
}

CubicSolution solve_cubic_cardano(const CubicCoefficients &c) { return solve_cubic(c.poly); }

std::complex<double> spin_energy_eps0_closed_form(const ModelParams &p, int n) {
  using C = std::complex<double>;
  const double Ms = p.M - p.C;
  const double h = n + 0.5;
  const double u = 3.0 * Ms * Ms * Ms / 27.0 - 2.0 * p.M * p.omega0 * p.omega0 * h * h;
  const double m3 = Ms / 3.0;
  const C root = std::sqrt(C{u * u - 4.0 * std::pow(m3, 6), 0.0});
  const C w = -0.5 * u + 0.5 * root;
  const C z = std::pow(w, 1.0 / 3.0);
  return z + (Ms * Ms / 9.0) / z - Ms / 3.0;
}

std::string to_string(LevelStatus s) {
  return s == LevelStatus::Bound ? "Bound" : "NoPhysicalRoot";
}

std::string to_string(RejectReason r) {
  switch (r) {
  case RejectReason::None: return "none";
  case RejectReason::ComplexRoot: return "complex";
  case RejectReason::GammaNonPositive: return "gamma<=0";
  case RejectReason::BelowShiftedMass: return "E-M+g'<=0";
  case RejectReason::PrincipalBranch: return "E+M+g'>=0";
  case RejectReason::LowerFlank: return "lower-flank";
  case RejectReason::LargeResidual: return "large-residual";
  case RejectReason::NotClosest: return "not-closest";
  }
  return "?";
}

double spin_residual(const ModelParams &p, int n, double E) {
  const double gamma = p.M + E - p.C;
  if (!(gamma > 0.0))
    return kNaN;
  const double gs = derived_constants(p).g_shift;
  return (2 * n + 1) * std::sqrt(p.M * p.omega0 * p.omega0 / (2.0 * gamma)) - (E - p.M + gs);
}

double pseudospin_residual(const ModelParams &p, int n, double E) {
  const double x = E - p.M - p.C;
  if (x < 0.0)
    return kNaN;
  const double gs = derived_constants(p).g_shift;
  return -(E + p.M + gs) * std::sqrt(2.0 * x / (p.M * p.omega0 * p.omega0)) - (2 * n + 1);
}

double relativistic_ho_residual(double M, double omega, int n, double E) {
  return std::sqrt((E + M) / (2.0 * M)) * (E - M) - (n + 0.5) * omega;
}

EnergyLevel select_physical_root(const CubicSolution &sol, const ModelParams &p, int n) {
  EnergyLevel lv;
  lv.n = n;
  lv.kappa = kappa_of(p.sym);
  lv.params = p;
  lv.E = kNaN;
  lv.residual = kNaN;
  lv.casus_irreducibilis = !sol.cardano_real;

  const double gs = derived_constants(p).g_shift;
  const bool spin = p.sym == SymmetryKind::Spin;
  const double flank = (p.M + 2.0 * p.C - gs) / 3.0;

  std::vector<RootCandidate> cands;
  std::vector<bool> boundary;
  int best = -1;
  for (const auto &z : sol.roots) {
    RootCandidate rc;
    rc.value = z;
    rc.residual = kNaN;
    bool edge = false;
    if (std::abs(z.imag()) > real_tolerance(z)) {
      rc.reason = RejectReason::ComplexRoot;
    } else {
      const double E = z.real();
      rc.value = {E, 0.0};
      auto fails = [&](double margin) {
        if (std::abs(margin) <= kBoundaryTol) {
          edge = true;
          return false;
        }
        return margin < 0.0;
      };
      if (spin) {
        if (fails(E + p.M - p.C))
          rc.reason = RejectReason::GammaNonPositive;
        else if (fails(E - p.M + gs))
          rc.reason = RejectReason::BelowShiftedMass;
        else
          rc.residual = spin_residual(p, n, E);
      } else {
        if (fails(E - p.M - p.C))
          rc.reason = RejectReason::GammaNonPositive;
        else if (fails(-(E + p.M + gs)))
          rc.reason = RejectReason::PrincipalBranch;
        else if (fails(E - flank))
          rc.reason = RejectReason::LowerFlank;
        else
          rc.residual = pseudospin_residual(p, n, std::max(E, p.M + p.C));
      }
      if (rc.reason == RejectReason::None &&
          !(std::abs(rc.residual) <= kResidualAccept))
        rc.reason = RejectReason::LargeResidual;
    }
    if (rc.reason == RejectReason::None) {
      const int idx = static_cast<int>(cands.size());
      if (best < 0 || std::abs(rc.residual) < std::abs(cands[best].residual)) {
        if (best >= 0)
          cands[best].reason = RejectReason::NotClosest;
        best = idx;
      } else {
        rc.reason = RejectReason::NotClosest;
      }
    }
    cands.push_back(rc);
    boundary.push_back(edge);
  }

  for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
    if (i == best)
      continue;
    lv.alternates.push_back(cands[i]);
  }
  if (best >= 0) {
    lv.status = LevelStatus::Bound;
    lv.E = cands[best].value.real();
    lv.residual = cands[best].residual;
    lv.on_boundary = boundary[best];
    lv.diag = diagnostics_at(p, lv.E);
  } else {
    lv.diag.g_shift = gs;
  }
  return lv;
}

EnergyLevel solve_spin_level(const ModelParams &p, int n) {
  if (p.sym != SymmetryKind::Spin)
    throw InvalidParams("solve_spin_level requires spin symmetry");
  const auto cc = cubic_coefficients(p, n);
  return select_physical_root(solve_cubic_cardano(cc), p, n);
}

EnergyLevel solve_pseudospin_level(const ModelParams &p, int n) {
  if (p.sym != SymmetryKind::Pseudospin)
    throw InvalidParams("solve_pseudospin_level requires pseudospin symmetry");
  const auto cc = cubic_coefficients(p, n);
  return select_physical_root(solve_cubic_cardano(cc), p, n);
}

EnergyLevel solve_level(const ModelParams &p, int n) {
  if (n < 0)
    throw InvalidParams("level index n must be non-negative");
  return p.sym == SymmetryKind::Spin ? solve_spin_level(p, n) : solve_pseudospin_level(p, n);
}

double relativistic_ho_level(double M, double omega, int n) {
  if (!(M > 0.0) || !(omega > 0.0))
    throw InvalidParams("M and omega must be positive");
  double lo = M;
  double hi = M + 10.0 * (n + 1) * omega + 10.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (relativistic_ho_residual(M, omega, n, mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double nr_spin_level(const ModelParams &p, int n) {
  return p.omega0 * (n + 0.5) - derived_constants(p).g_shift;
}

double nr_pseudospin_level(const ModelParams &p, int n) {
  const double h = n + 0.5;
  const double x = p.q * p.eps / (2.0 * p.M * p.omega0);
  const double bracket = 1.0 + x * x;
  return p.omega0 * p.omega0 / (2.0 * p.M) * h * h / (bracket * bracket);
}

std::vector<GridCell> spectrum_grid(const ModelParams &p, int n_max,
                                    const std::vector<double> &eps_list) {
  if (n_max < 0)
    throw InvalidParams("n_max must be non-negative");
  std::vector<GridCell> out;
  out.reserve(static_cast<std::size_t>(n_max + 1) * eps_list.size());
  for (int n = 0; n <= n_max; ++n) {
    for (double eps : eps_list) {
      ModelParams q = p;
      q.eps = eps;
      out.push_back({n, eps, solve_level(q, n)});
    }
  }
  return out;
}

namespace {

double oracle_residual(OracleEquation eq, const ModelParams &p, int n, double E) {
  switch (eq) {
  case OracleEquation::SpinLevel: return spin_residual(p, n, E);
  case OracleEquation::PseudospinLevel: return pseudospin_residual(p, n, E);
  case OracleEquation::RelativisticOscillator: return relativistic_ho_residual(p.M, p.omega0, n, E);
  }
  return kNaN;
}

} // namespace

double bisection_oracle(OracleEquation eq, const ModelParams &p, int n, Bracket b) {
  double lo = b.lo, hi = b.hi;
  double flo = oracle_residual(eq, p, n, lo);
  const double fhi = oracle_residual(eq, p, n, hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo > 0.0) == (fhi > 0.0) ||
      flo == 0.0 || fhi == 0.0) {
    if (flo == 0.0)
      return lo;
    if (fhi == 0.0)
      return hi;
    throw NoSignChange("residual does not change sign over [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = oracle_residual(eq, p, n, mid);
    if (fm == 0.0)
      return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<Bracket> oracle_bracket(OracleEquation eq, const ModelParams &p, int n) {
  const double gs = derived_constants(p).g_shift;
  auto f = [&](double E) { return oracle_residual(eq, p, n, E); };

  if (eq == OracleEquation::PseudospinLevel) {
    const double lo = p.M + p.C;
    const double hi = -(p.M + gs);
    if (!(hi > lo))
      return std::nullopt;
    // golden-section search for the hump of the residual
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = f(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = f(x1);
      }
    }
    const double top = 0.5 * (a + b);
    if (!(f(top) > 0.0))
      return std::nullopt;
    return Bracket{top, hi};
  }

  double base;
  if (eq == OracleEquation::SpinLevel)
    base = std::max(p.C - p.M, p.M - gs);
  else
    base = p.M;
  const double lo = base + 1e-9;
  if (!(f(lo) > 0.0))
    return std::nullopt;
  double width = 1.0;
  while (width <= 1e3) {
    if (f(base + width) < 0.0)
      return Bracket{lo, base + width};
    width *= 2.0;
  }
  return std::nullopt;
}

std::optional<double> oracle_level(OracleEquation eq, const ModelParams &p, int n) {
  const auto b = oracle_bracket(eq, p, n);
  if (!b)
    return std::nullopt;
  return bisection_oracle(eq, p, n, *b);
}

BreakdownScan scan_breakdown(const ModelParams &p, int n, double eps_max, double step) {
  BreakdownScan out;
  out.eps_max = eps_max;
  auto at = [&](double eps) {
    ModelParams q = p;
    q.eps = eps;
    const auto cc = cubic_coefficients(q, n);
    const auto sol = solve_cubic_cardano(cc);
    const auto lv = select_physical_root(sol, q, n);
    return std::pair{sol.cardano_real, lv.bound()};
  };
  auto refine = [&](double lo, double hi, auto pred) {
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (pred(mid))
        hi = mid;
      else
        lo = mid;
    }
    return 0.5 * (lo + hi);
  };

  const auto first = at(p.eps);
  bool disc_prev = first.first;
  bool bound_prev = first.second;
  for (double eps = p.eps; eps < eps_max;) {
    const double next = std::min(eps + step, eps_max);
    const auto cur = at(next);
    if (!out.discriminant_threshold && cur.first && !disc_prev)
      out.discriminant_threshold = refine(eps, next, [&](double x) { return at(x).first; });
    if (!out.root_loss_threshold && !cur.second && bound_prev)
      out.root_loss_threshold = refine(eps, next, [&](double x) { return !at(x).second; });
    disc_prev = cur.first;
    bound_prev = cur.second;
    if (out.discriminant_threshold && out.root_loss_threshold)
      break;
    eps = next;
  }
  return out;
}

} // namespace starkdirac
