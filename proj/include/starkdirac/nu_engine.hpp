#pragma once

// Nikiforov-Uvarov reduction for equations of hypergeometric type
//
//   u'' + (tau_tilde / sigma) u' + (sigma_tilde / sigma^2) u = 0
//
// with deg(sigma), deg(sigma_tilde) <= 2 and deg(tau_tilde) <= 1.  The
// auxiliary polynomial
//
//   pi = (sigma' - tau_tilde)/2 +- sqrt( ((sigma' - tau_tilde)/2)^2 - sigma_tilde + k sigma )
//
// must be a polynomial, which fixes k by requiring the radicand to be a
// perfect square in r.  Then tau = tau_tilde + 2 pi, lambda = k + pi', and
// the eigenvalue condition is lambda = lambda_n = -n tau' - n(n-1) sigma''/2.
//
// Coefficients are carried as complex numbers so instances whose radicand
// has a negative leading coefficient produce imaginary pi without special
// casing.

#include "starkdirac/model.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace starkdirac {

using cplx = std::complex<double>;

template <typename T> struct BasicPoly2 {
  T c0{}, c1{}, c2{};

  int degree() const {
    if (c2 != T{})
      return 2;
    if (c1 != T{})
      return 1;
    return c0 != T{} ? 0 : -1;
  }
  T operator()(T r) const { return (c2 * r + c1) * r + c0; }
  BasicPoly2 derivative() const { return {c1, T{2} * c2, T{}}; }

  friend BasicPoly2 operator+(const BasicPoly2 &a, const BasicPoly2 &b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
  }
  friend BasicPoly2 operator-(const BasicPoly2 &a, const BasicPoly2 &b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
  }
  friend BasicPoly2 operator*(T s, const BasicPoly2 &a) {
    return {s * a.c0, s * a.c1, s * a.c2};
  }
};

using Poly2 = BasicPoly2<double>;
using ComplexPoly2 = BasicPoly2<cplx>;

ComplexPoly2 to_complex(const Poly2 &p);

class NuError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class NoAdmissibleBranch : public NuError {
public:
  using NuError::NuError;
};
class NonPolynomialRoot : public NuError {
public:
  using NuError::NuError;
};

struct NuReduction {
  ComplexPoly2 pi;
  cplx k;
  ComplexPoly2 tau;
  cplx tau_slope;   // tau'
  cplx lambda;      // k + pi'
  cplx sigma_curv;  // sigma''
  int root_sign = -1; // sign in front of the square root in pi
  int k_index = 0;    // which perfect-square k produced this branch
  bool admissible = false;

  cplx lambda_n(int n) const {
    return -static_cast<double>(n) * tau_slope -
           0.5 * static_cast<double>(n) * (n - 1) * sigma_curv;
  }
  // True when every coefficient of pi, tau and k is real to round-off.
  bool is_real(double tol = 1e-12) const;
  std::string branch_label() const;
};

// "Negative" for a complex number: negative real part, or a vanishing real
// part with negative imaginary part.
bool complex_negative(cplx z, double tol = 1e-14);

// All (pi, k) branches, admissible ones first; within equal admissibility
// the branch whose pi has a negative leading coefficient comes first.
// Throws NonPolynomialRoot if no k makes the radicand a perfect square and
// NoAdmissibleBranch if every branch has tau' >= 0.
std::vector<NuReduction> reduce(const Poly2 &sigma, const Poly2 &sigma_tilde,
                                const Poly2 &tau_tilde);

// As reduce() but never throws NoAdmissibleBranch; returns every branch.
std::vector<NuReduction> enumerate_branches(const Poly2 &sigma,
                                            const Poly2 &sigma_tilde,
                                            const Poly2 &tau_tilde);

// lambda - lambda_n(n); a zero in the embedded energy is the eigenvalue condition.
cplx quantize(const NuReduction &red, int n);

// The s-wave radial equation of a Dirac level at trial energy E, written as
// u'' + sigma_tilde(r) u = 0 with sigma = 1, tau_tilde = 0.
//
// spin:        gamma = M + E - C_s,  sigma_tilde = -v2 r^2 + beta r - alpha
//              v2 = M w0^2 gamma / 2, beta = q eps gamma, alpha = gamma (M - E)
// pseudospin:  gamma = M - E + C_ps, sigma_tilde = v2 r^2 - beta r - alpha
//              v2 = M w0^2 gamma / 2, beta = q eps gamma, alpha = gamma (M + E)
struct DiracInstance {
  SymmetryKind sym;
  double E;
  double gamma;
  double v2;
  double beta;
  double alpha;
  Poly2 sigma_tilde;
};

DiracInstance dirac_instance(const ModelParams &p, double E);

constexpr Poly2 kUnitSigma{1.0, 0.0, 0.0};
constexpr Poly2 kZeroTau{0.0, 0.0, 0.0};

} // namespace starkdirac
