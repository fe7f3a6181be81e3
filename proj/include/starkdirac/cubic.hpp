#pragma once

// Cubic A E^3 + B E^2 + C E + D = 0 via the depressed form
//
//   E = y - B/(3A),   y^3 + d y = -e,
//   d = C/A - B^2/(3A^2),   e = D/A + B(2B^2 - 9AC)/(27A^3),
//
// and Vieta's substitution y = z - d/(3z), which leaves the quadratic
// (z^3)^2 + e z^3 + p = 0 with p = -(d/3)^3.  When e^2 >= 4p the real
// Cardano form applies; otherwise the cubic has three distinct real roots
// (casus irreducibilis) and the trigonometric form is used.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace starkdirac {

class DegenerateCubic : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Cubic {
  double A = 1.0, B = 0.0, C = 0.0, D = 0.0;

  std::complex<double> operator()(std::complex<double> E) const {
    return ((A * E + B) * E + C) * E + D;
  }
  double operator()(double E) const { return ((A * E + B) * E + C) * E + D; }
};

enum class CubicMethod {
  CardanoA7,    // real Cardano radical form plus deflation
  Trigonometric // cos / cosh / sinh forms
};

std::string to_string(CubicMethod m);

struct CubicSolution {
  std::array<std::complex<double>, 3> roots{};
  double d = 0.0;
  double e = 0.0;
  double p = 0.0;            // -(d/3)^3
  bool cardano_real = true;  // e^2 >= 4p
  CubicMethod method = CubicMethod::CardanoA7;

  // Real roots (|Im| below tolerance), ascending.
  std::vector<double> real_roots(double tol = 1e-10) const;
};

struct DepressedCubic {
  double d, e, p;
};

DepressedCubic depress(const Cubic &c);

// Cardano when e^2 >= 4p, trigonometric otherwise. Roots are polished
// with Newton steps on the original polynomial.
CubicSolution solve_cubic(const Cubic &c);

// Forces one route for every discriminant regime; no polishing, so the two
// routes can be checked against each other.
//   CardanoA7: complex-arithmetic Cardano, z^3 = -e/2 +- sqrt(e^2 - 4p)/2.
//   Trigonometric: three-cosine form when e^2 < 4p, cosh/sinh form otherwise.
CubicSolution solve_cubic_with(const Cubic &c, CubicMethod method);

} // namespace starkdirac
