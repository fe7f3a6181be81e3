#include "starkdirac/nu_engine.hpp"

#include <algorithm>
#include <cmath>

namespace starkdirac {

namespace {

// std::sqrt on complex respects the sign of a zero imaginary part, so
// -(x + 0i) would land on the lower branch. Strip negative zeros first.
cplx canon(cplx z) { return {z.real() + 0.0, z.imag() + 0.0}; }

cplx csqrt(cplx z) { return std::sqrt(canon(z)); }

double scale_of(std::initializer_list<cplx> zs) {
  double s = 0.0;
  for (auto z : zs)
    s = std::max(s, std::abs(z));
  return s;
}

bool near_zero(cplx z, double scale) {
  return std::abs(z) <= 1e-13 * std::max(1.0, scale);
}

std::vector<cplx> perfect_square_ks(const ComplexPoly2 &p, const ComplexPoly2 &s) {
  // discriminant of (p + k s) as a polynomial in r, itself quadratic in k
  const cplx A = s.c1 * s.c1 - 4.0 * s.c2 * s.c0;
  const cplx B = 2.0 * p.c1 * s.c1 - 4.0 * (p.c2 * s.c0 + s.c2 * p.c0);
  const cplx C = p.c1 * p.c1 - 4.0 * p.c2 * p.c0;
  const double scale = scale_of({A, B, C});

  if (!near_zero(A, scale)) {
    const cplx root = csqrt(B * B - 4.0 * A * C);
    // numerically stable pairing
    const cplx qq = -0.5 * (B + (std::real(std::conj(B) * root) >= 0.0 ? root : -root));
    if (std::abs(qq) == 0.0)
      return {cplx{0.0, 0.0}};
    cplx k1 = qq / A;
    cplx k2 = C / qq;
    if (std::abs(k1 - k2) <= 1e-14 * std::max(1.0, std::abs(k1)))
      return {k1};
    return {k1, k2};
  }
  if (!near_zero(B, scale))
    return {-C / B};
  throw NonPolynomialRoot(
      "no value of k turns the radicand into a perfect square");
}

} // namespace

ComplexPoly2 to_complex(const Poly2 &p) {
  return {cplx{p.c0, 0.0}, cplx{p.c1, 0.0}, cplx{p.c2, 0.0}};
}

bool complex_negative(cplx z, double tol) {
  const double mag = std::abs(z);
  if (std::abs(z.real()) > tol * std::max(1.0, mag))
    return z.real() < 0.0;
  return z.imag() < 0.0;
}

bool NuReduction::is_real(double tol) const {
  auto r = [tol](cplx z) { return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z)); };
  return r(k) && r(pi.c0) && r(pi.c1) && r(tau.c0) && r(tau.c1) && r(lambda);
}

std::string NuReduction::branch_label() const {
  return "k" + std::to_string(k_index) + (root_sign < 0 ? "-" : "+");
}

std::vector<NuReduction> enumerate_branches(const Poly2 &sigma,
                                            const Poly2 &sigma_tilde,
                                            const Poly2 &tau_tilde) {
  if (sigma.degree() < 0)
    throw NuError("sigma must not vanish identically");

  const ComplexPoly2 s = to_complex(sigma);
  const ComplexPoly2 st = to_complex(sigma_tilde);
  const ComplexPoly2 tt = to_complex(tau_tilde);

  // u = (sigma' - tau_tilde)/2, degree <= 1
  const ComplexPoly2 u = cplx{0.5, 0.0} * (s.derivative() - tt);
  const ComplexPoly2 u2{u.c0 * u.c0, 2.0 * u.c0 * u.c1, u.c1 * u.c1};
  const ComplexPoly2 p = u2 - st;

  const auto ks = perfect_square_ks(p, s);

  std::vector<NuReduction> out;
  for (std::size_t ki = 0; ki < ks.size(); ++ki) {
    const cplx k = ks[ki];
    const ComplexPoly2 q = p + k * s;
    const double scale = scale_of({q.c0, q.c1, q.c2});

    ComplexPoly2 root; // sqrt(q) as a degree <= 1 polynomial
    if (!near_zero(q.c2, scale)) {
      const cplx a = csqrt(q.c2);
      root = {q.c1 / (2.0 * a), a, cplx{}};
    } else {
      root = {csqrt(q.c0), cplx{}, cplx{}};
    }

    for (int sign : {-1, +1}) {
      NuReduction red;
      red.k = k;
      red.k_index = static_cast<int>(ki);
      red.root_sign = sign;
      red.pi = u + cplx{static_cast<double>(sign), 0.0} * root;
      red.pi.c2 = cplx{};
      red.tau = tt + cplx{2.0, 0.0} * red.pi;
      red.tau_slope = red.tau.c1;
      red.lambda = k + red.pi.c1;
      red.sigma_curv = 2.0 * s.c2;
      red.admissible = complex_negative(red.tau_slope);
      out.push_back(red);
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const NuReduction &a, const NuReduction &b) {
    if (a.admissible != b.admissible)
      return a.admissible;
    const bool an = complex_negative(a.pi.c1);
    const bool bn = complex_negative(b.pi.c1);
    return an && !bn;
  });
  return out;
}

std::vector<NuReduction> reduce(const Poly2 &sigma, const Poly2 &sigma_tilde,
                                const Poly2 &tau_tilde) {
  auto out = enumerate_branches(sigma, sigma_tilde, tau_tilde);
  if (out.empty() || !out.front().admissible)
    throw NoAdmissibleBranch("every NU branch has tau' >= 0");
  return out;
}

cplx quantize(const NuReduction &red, int n) { return red.lambda - red.lambda_n(n); }

DiracInstance dirac_instance(const ModelParams &p, double E) {
  DiracInstance d;
  d.sym = p.sym;
  d.E = E;
  const double w2 = p.M * p.omega0 * p.omega0;
  if (p.sym == SymmetryKind::Spin) {
    d.gamma = p.M + E - p.C;
    d.v2 = 0.5 * w2 * d.gamma;
    d.beta = p.q * p.eps * d.gamma;
    d.alpha = d.gamma * (p.M - E);
    d.sigma_tilde = {-d.alpha, d.beta, -d.v2};
  } else {
    d.gamma = p.M - E + p.C;
    d.v2 = 0.5 * w2 * d.gamma;
    d.beta = p.q * p.eps * d.gamma;
    d.alpha = d.gamma * (p.M + E);
    d.sigma_tilde = {-d.alpha, -d.beta, d.v2};
  }
  return d;
}

} // namespace starkdirac
