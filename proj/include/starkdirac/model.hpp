#pragma once

// Physical inputs and the combined oscillator-plus-Stark potential
//   V(r) = M w0^2 r^2 / 2 - q eps r
// All quantities are pure numbers in units hbar = c = 1.

#include <stdexcept>
#include <string>
#include <vector>

namespace starkdirac {

enum class SymmetryKind { Spin, Pseudospin };

// kappa = -1 for spin symmetry, +1 for pseudospin symmetry (s-wave only)
constexpr int kappa_of(SymmetryKind s) { return s == SymmetryKind::Spin ? -1 : +1; }

std::string to_string(SymmetryKind s);
SymmetryKind symmetry_from_string(const std::string &name);

class InvalidParams : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ModelParams {
  double M = 1.0;
  double omega0 = 1.0;
  double q = 1.0;
  double eps = 0.0;
  SymmetryKind sym = SymmetryKind::Spin;
  double C = 0.0; // C_s (spin) or C_ps (pseudospin)

  // Throws InvalidParams on M <= 0, omega0 <= 0, eps < 0, non-finite
  // entries, or q == 0 with a nonzero field.
  void validate() const;
};

struct DerivedConstants {
  double g_shift = 0.0; // q^2 eps^2 / (2 M w0^2), Stark shift of the spectrum
  double r0 = 0.0;      // q eps / (M w0^2), displacement of the well bottom
  double g_eps = 0.0;   // g_shift - M
  double M_s = 0.0;     // M - C
};

DerivedConstants derived_constants(const ModelParams &p);

// V(r) in the direct form.
double eval_potential(const ModelParams &p, double r);

// V(r) written as a shifted oscillator, M w0^2 (r - r0)^2 / 2 - g_shift.
double eval_potential_completed_square(const ModelParams &p, double r);

struct CurvePoint {
  double r;
  double V;
};

// Uniform samples of V on [0, r_max]; samples >= 2 includes both endpoints.
std::vector<CurvePoint> potential_curve(const ModelParams &p, double r_max,
                                        int samples);

constexpr double kDefaultCurveRMax = 15.0;
constexpr int kDefaultCurveSamples = 600;

} // namespace starkdirac
