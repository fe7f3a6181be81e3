#pragma once

// Spinor components of a solved level, evaluated from their closed forms.
//
//   F_{n,-1}(r) = N exp[-eps1 (lambda^2 r^2 / 2 - b r)] L_n[eps2 (lambda^2 r - b)^2]
//   R_n(r)      = (lambda^2/pi)^{1/4} / sqrt(2^n n!) exp[-lambda^2 (r - r0)^2 / 2] H_n(lambda (r - r0))
//   G_{n,-1}(r) = d0 (d/dr + kappa/r) F(r)
//   G_{n,1}(r)  = N exp[i eps1' (-b r + lambda^2 r^2 / 2)] H_n[-i eps2' (lambda^2 r - b)^2]
//
// with lambda = sqrt(M w0), b = q eps / w0, eps1 = sqrt(gamma / 2M),
// eps2 = gamma / (2 M v), d0 = 1 / gamma, eps1' = sqrt(gamma~) / 2M and
// eps2' = gamma~ / (2 M v~).  Normalization constants are numeric.

#include "starkdirac/model.hpp"
#include "starkdirac/spectra.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace starkdirac {

class ConstantsUndefined : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class SingularAtOrigin : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct ShapeConstants {
  double lambda_scale = 0.0; // sqrt(M w0)
  double b = 0.0;            // q eps / w0
  double r0 = 0.0;           // b / lambda^2
  // spin branch
  double gamma = 0.0;
  double v = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double d0 = 0.0;
  // pseudospin branch; gamma~ may be negative so these are complex
  std::complex<double> v_tilde;
  std::complex<double> eps1p;
  std::complex<double> eps2p;
};

// Constants at a solved level. Throws ConstantsUndefined if the level is
// not Bound or, for spin, gamma <= 0.
ShapeConstants shape_constants(const EnergyLevel &level);

enum class RadialKind { UpperF, LowerG, NonRelR, PseudoLowerG };
std::string to_string(RadialKind k);

double upper_spinor_F(const EnergyLevel &level, double r);
double nr_radial_R(const ModelParams &p, int n, double r);

// d0 (F' + kappa F / r) with a central difference, step 1e-6 max(1, r).
// Throws SingularAtOrigin for r < 1e-8.
double lower_spinor_G(const EnergyLevel &level, double r);
// The same derivative with an explicit step.
double lower_spinor_G_step(const EnergyLevel &level, double r, double h);
// The printed closed form with L_n^{(0)} and L_n^{(1)}, same d0 scaling.
double lower_spinor_G_closed_form(const EnergyLevel &level, double r);

std::complex<double> pseudo_lower_G(const EnergyLevel &level, double r);

struct RadialSample {
  double r;
  std::complex<double> value;
};

struct RadialFunction {
  RadialKind kind = RadialKind::UpperF;
  int n = 0;
  std::vector<RadialSample> samples;
  double norm = 0.0; // L2 norm of the raw samples on the grid
  int nodes = 0;
  bool normalized = false;
};

struct SampleGrid {
  double r_lo = 0.0;
  double r_hi = 0.0;
  int count = 4001; // rounded up to odd
};

// Default radial window [0, r0 + 20/lambda].
SampleGrid default_grid(const ModelParams &p, int count = 4001);

RadialFunction sample_upper_F(const EnergyLevel &level, const SampleGrid &g, bool normalize);
RadialFunction sample_lower_G(const EnergyLevel &level, const SampleGrid &g, bool normalize);
RadialFunction sample_nr_R(const ModelParams &p, int n, const SampleGrid &g, bool normalize);
RadialFunction sample_pseudo_G(const EnergyLevel &level, const SampleGrid &g, bool normalize);

// Simpson integral of |f|^2 over the sample grid.
double l2_norm_squared(const RadialFunction &f);
// Interior sign changes of the real part, exact zeros skipped.
int count_nodes(const std::vector<RadialSample> &s);
// |f(r_lo)| / max |f|
double boundary_defect(const RadialFunction &f);
// <r> = int r |f|^2 / int |f|^2
double mean_radius(const RadialFunction &f);
// After rotating by the phase of the largest-modulus sample:
// max |Im| / max |f|.
double realness_defect(const RadialFunction &f);

struct GDeviation {
  double r;
  double numeric;
  double closed_form;
  double rel_deviation;
  double richardson_gap; // |D(h) - D(h/2)| of the numeric derivative path
};

// Numeric-derivative G vs the printed closed form over [r_lo, r_hi].
std::vector<GDeviation> g_deviation_profile(const EnergyLevel &level, double r_lo,
                                            double r_hi, int count);

} // namespace starkdirac
