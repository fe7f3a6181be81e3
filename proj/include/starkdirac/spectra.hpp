#pragma once

// s-wave Dirac energy levels for the oscillator-plus-Stark potential.
//
// Spin symmetry (kappa = -1) levels solve
//   (2n+1) sqrt(M w0^2 / (2 gamma)) = E - M + g',     gamma = M + E - C_s > 0,
// which after squaring is the cubic
//   (E + M - C_s)(E - M + g')^2 = 2 M w0^2 (n + 1/2)^2.
//
// Pseudospin symmetry (kappa = +1) levels solve
//   (2n+1) = -(E + M + g') sqrt(2 (E - M - C_ps) / (M w0^2)),
// i.e. (E - M - C_ps)(E + M + g')^2 = 2 M w0^2 (n + 1/2)^2 restricted to the
// descending flank of the left-hand side below E = -(M + g').

#include "starkdirac/cubic.hpp"
#include "starkdirac/model.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starkdirac {

struct CubicCoefficients {
  Cubic poly;
  SymmetryKind sym = SymmetryKind::Spin;
  int n = 0;
  ModelParams params;
};

// 2 M w0^2 (n + 1/2)^2
double oscillator_rhs(const ModelParams &p, int n);

// Expanded (E + M_s)(E + g)^2 - rhs with g = g_shift - M, M_s = M - C_s.
Cubic spin_cubic(double M, double C_s, double g_shift, double rhs);
// Expanded (E - M - C_ps)(E + M + g_shift)^2 - rhs.
Cubic pseudospin_cubic(double M, double C_ps, double g_shift, double rhs);
// P(E) -> -P(-E): the image of a spin cubic under E -> -E once C_s -> -C_ps,
// g' -> -g' and rhs -> -rhs have been applied to its parameters.
Cubic reflect(const Cubic &c);

CubicCoefficients cubic_coefficients(const ModelParams &p, int n);

CubicSolution solve_cubic_cardano(const CubicCoefficients &c);

// The closed form printed for eps = 0 (spin), evaluated with the '+' sign.
// Kept for the verification report only; the depressed-cubic route is the
// one used for levels.
std::complex<double> spin_energy_eps0_closed_form(const ModelParams &p, int n);

enum class LevelStatus { Bound, NoPhysicalRoot };

enum class RejectReason {
  None,
  ComplexRoot,
  GammaNonPositive,   // spin: E + M - C_s <= 0;  pseudospin: E - M - C_ps <= 0
  BelowShiftedMass,   // spin: E - M + g' <= 0
  PrincipalBranch,    // pseudospin: E + M + g' >= 0 (companion root)
  LowerFlank,         // pseudospin: root continuous with E -> M + C_ps as w0 -> 0
  LargeResidual,
  NotClosest,
};

std::string to_string(LevelStatus s);
std::string to_string(RejectReason r);

struct RootCandidate {
  std::complex<double> value;
  RejectReason reason = RejectReason::None;
  double residual = 0.0; // unsquared residual, NaN where undefined
};

// Derived scalars of the radial equation at the selected energy.
struct LevelDiagnostics {
  double gamma = 0.0; // gamma_{-1} or gamma~_{1}
  double v2 = 0.0;    // v^2 = M w0^2 gamma / 2 (negative on the pseudospin table branch)
  double beta = 0.0;
  double alpha = 0.0;
  double g_shift = 0.0;
};

struct EnergyLevel {
  int n = 0;
  int kappa = -1;
  ModelParams params;
  double E = 0.0; // NaN unless Bound
  std::vector<RootCandidate> alternates;
  double residual = 0.0;
  LevelStatus status = LevelStatus::NoPhysicalRoot;
  bool casus_irreducibilis = false; // e^2 < 4p
  bool on_boundary = false;
  LevelDiagnostics diag;

  bool bound() const { return status == LevelStatus::Bound; }
};

double spin_residual(const ModelParams &p, int n, double E);
double pseudospin_residual(const ModelParams &p, int n, double E);
// sqrt((E + M)/(2M)) (E - M) - (n + 1/2) w
double relativistic_ho_residual(double M, double omega, int n, double E);

EnergyLevel select_physical_root(const CubicSolution &sol, const ModelParams &p, int n);

EnergyLevel solve_spin_level(const ModelParams &p, int n);
EnergyLevel solve_pseudospin_level(const ModelParams &p, int n);
EnergyLevel solve_level(const ModelParams &p, int n);

double relativistic_ho_level(double M, double omega, int n);
double nr_spin_level(const ModelParams &p, int n);
double nr_pseudospin_level(const ModelParams &p, int n);

struct GridCell {
  int n;
  double eps;
  EnergyLevel level;
};

// Rows ordered n outer, eps inner.
std::vector<GridCell> spectrum_grid(const ModelParams &p, int n_max,
                                    const std::vector<double> &eps_list);

// Independent root finder on the unsquared equations.
enum class OracleEquation { SpinLevel, PseudospinLevel, RelativisticOscillator };

class NoSignChange : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Bracket {
  double lo, hi;
};

// Bisection to 1e-12 absolute, at most 200 iterations.
double bisection_oracle(OracleEquation eq, const ModelParams &p, int n, Bracket b);

// Bracket search over the sign-admissible window; nullopt when no bound
// level exists on the physical branch.
std::optional<Bracket> oracle_bracket(OracleEquation eq, const ModelParams &p, int n);
std::optional<double> oracle_level(OracleEquation eq, const ModelParams &p, int n);

struct BreakdownScan {
  std::optional<double> discriminant_threshold; // first eps with e^2 >= 4p
  std::optional<double> root_loss_threshold;    // first eps without a Bound level
  double eps_max = 0.0;
};

// Scans eps upward from p.eps in steps of `step` up to eps_max, refining
// each transition by bisection.
BreakdownScan scan_breakdown(const ModelParams &p, int n, double eps_max = 5.0,
                             double step = 0.01);

} // namespace starkdirac
