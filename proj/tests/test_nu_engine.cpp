#include "starkdirac/nu_engine.hpp"
#include "starkdirac/spectra.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace starkdirac;

namespace {

void expect_c(cplx got, cplx want, double tol, const char *what) {
  EXPECT_LE(std::abs(got - want), tol * std::max(1.0, std::abs(want)))
      << what << ": got " << got << " want " << want;
}

void expect_structure(const NuReduction &r, const Poly2 &tau_tilde) {
  const auto tt = to_complex(tau_tilde);
  EXPECT_EQ(r.tau.c0, tt.c0 + 2.0 * r.pi.c0);
  EXPECT_EQ(r.tau.c1, tt.c1 + 2.0 * r.pi.c1);
  EXPECT_EQ(r.tau_slope, r.tau.c1);
  EXPECT_EQ(r.lambda, r.k + r.pi.c1);
}

} // namespace

TEST(Poly2, DegreeAndArithmetic) {
  EXPECT_EQ((Poly2{0, 0, 0}).degree(), -1);
  EXPECT_EQ((Poly2{3, 0, 0}).degree(), 0);
  EXPECT_EQ((Poly2{0, 2, 0}).degree(), 1);
  EXPECT_EQ((Poly2{0, 0, -1}).degree(), 2);
  const Poly2 a{1, 2, 3}, b{-1, 0.5, 4};
  EXPECT_DOUBLE_EQ(a(2.0), 1 + 4 + 12);
  const auto d = a.derivative();
  EXPECT_EQ(d.c0, 2.0);
  EXPECT_EQ(d.c1, 6.0);
  EXPECT_EQ(d.c2, 0.0);
  const auto s = a + b;
  EXPECT_EQ(s.c2, 7.0);
  const auto m = 2.0 * (a - b);
  EXPECT_EQ(m.c0, 4.0);
  EXPECT_EQ(m.c1, 3.0);
  EXPECT_EQ(m.c2, -2.0);
}

TEST(ComplexNegative, Convention) {
  EXPECT_TRUE(complex_negative({-1.0, 5.0}));
  EXPECT_FALSE(complex_negative({1.0, -5.0}));
  EXPECT_TRUE(complex_negative({0.0, -2.0}));
  EXPECT_FALSE(complex_negative({0.0, 2.0}));
  EXPECT_FALSE(complex_negative({0.0, 0.0}));
}

TEST(NuReduce, SpinExample) {
  const Poly2 st{-1.0, 4.0, -4.0}; // v=2, beta=4, alpha=1
  const auto br = reduce(kUnitSigma, st, kZeroTau);
  ASSERT_EQ(br.size(), 2u);
  const auto &r = br.front();
  EXPECT_TRUE(r.admissible);
  EXPECT_FALSE(br.back().admissible);
  EXPECT_TRUE(r.is_real());
  expect_c(r.k, 0.0, 1e-14, "k");
  expect_c(r.pi.c1, -2.0, 1e-14, "pi'");
  expect_c(r.pi.c0, 1.0, 1e-14, "pi0");
  expect_c(r.tau.c1, -4.0, 1e-14, "tau'");
  expect_c(r.tau.c0, 2.0, 1e-14, "tau0");
  expect_c(r.lambda, -2.0, 1e-14, "lambda");
  for (int n = 0; n < 6; ++n)
    expect_c(r.lambda_n(n), 4.0 * n, 1e-14, "lambda_n");
  expect_structure(r, kZeroTau);
  EXPECT_EQ(r.branch_label(), "k0-");
}

TEST(NuReduce, PureOscillator) {
  const auto br = reduce(kUnitSigma, Poly2{0.0, 0.0, -1.0}, kZeroTau);
  const auto &r = br.front();
  expect_c(r.pi.c1, -1.0, 1e-15, "pi'");
  expect_c(r.pi.c0, 0.0, 1e-15, "pi0");
  expect_c(r.k, 0.0, 1e-15, "k");
  expect_c(r.tau.c1, -2.0, 1e-15, "tau'");
  expect_c(r.lambda, -1.0, 1e-15, "lambda");
  expect_c(r.lambda_n(3), 6.0, 1e-15, "lambda_3");
  // u'' + (alpha - r^2) u = 0: quantization gives alpha = 2n + 1
  for (int n = 0; n < 5; ++n) {
    const auto rr = reduce(kUnitSigma, Poly2{2.0 * n + 1.0, 0.0, -1.0}, kZeroTau).front();
    expect_c(quantize(rr, n), 0.0, 1e-14, "alpha = 2n+1");
    const auto off = reduce(kUnitSigma, Poly2{2.0 * n + 1.5, 0.0, -1.0}, kZeroTau).front();
    EXPECT_GT(std::abs(quantize(off, n)), 0.1);
  }
}

TEST(NuReduce, PseudospinImaginaryCollapse) {
  const double v = 1.0, beta = 2.0, alpha = 0.5;
  const Poly2 st{-alpha, -beta, v * v};
  const auto br = reduce(kUnitSigma, st, kZeroTau);
  const auto &r = br.front();
  EXPECT_TRUE(r.admissible);
  EXPECT_FALSE(r.is_real());
  expect_c(r.k, -(beta * beta / (4 * v * v) + alpha), 1e-14, "k");
  // pi = -i (v r - beta / 2v)
  const cplx I{0.0, 1.0};
  expect_c(r.pi.c1, -I * v, 1e-14, "pi'");
  expect_c(r.pi.c0, I * beta / (2 * v), 1e-14, "pi0");
  expect_c(r.tau_slope, -2.0 * I * v, 1e-14, "tau'");
  expect_c(r.lambda, r.k - I * v, 1e-14, "lambda");
  expect_structure(r, kZeroTau);
}

TEST(NuReduce, ErrorPaths) {
  EXPECT_THROW(reduce(Poly2{0, 0, 0}, Poly2{1, 0, 0}, kZeroTau), NuError);
  // sigma = r, sigma_tilde = r: radicand 1/4 - r + k r, perfect square only at k = 1,
  // which leaves pi constant and tau' = 0
  EXPECT_THROW(reduce(Poly2{0, 1, 0}, Poly2{0, 1, 0}, Poly2{0, 0, 0}), NoAdmissibleBranch);
  EXPECT_NO_THROW(enumerate_branches(Poly2{0, 1, 0}, Poly2{0, 1, 0}, Poly2{0, 0, 0}));
}

TEST(NuReduce, GeneralSigmaStructure) {
  // Laguerre-type: sigma = r, tau_tilde = 1 - r/2 style instances
  const Poly2 sigma{0, 1, 0}, tt{1.0, 0.0, 0.0}, st{-0.3, 2.0, -0.25};
  const auto br = enumerate_branches(sigma, st, tt);
  ASSERT_FALSE(br.empty());
  for (const auto &r : br) {
    expect_structure(r, tt);
    // radicand ((sigma'-tt)/2)^2 - st + k sigma must equal (pi - u)^2
    const cplx u = 0.5 * (1.0 - 1.0);
    for (double x : {0.3, 1.7, 4.0}) {
      const cplx rad = u * u - st(x) + r.k * x;
      const cplx d = r.pi(cplx{x, 0.0}) - u;
      EXPECT_LE(std::abs(d * d - rad), 1e-11 * std::max(1.0, std::abs(rad)));
    }
  }
}

TEST(NuReduce, SpinClosedFormsFuzz) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.05, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double v = u(rng), beta = u(rng), alpha = u(rng);
    const auto r = reduce(kUnitSigma, Poly2{-alpha, beta, -v * v}, kZeroTau).front();
    const double k = beta * beta / (4 * v * v) - alpha;
    expect_c(r.k, k, 1e-12, "k");
    expect_c(r.pi.c1, -v, 1e-12, "pi'");
    expect_c(r.pi.c0, beta / (2 * v), 1e-12, "pi0");
    expect_c(r.tau.c1, -2 * v, 1e-12, "tau'");
    expect_c(r.tau.c0, beta / v, 1e-12, "tau0");
    expect_c(r.lambda, k - v, 1e-12, "lambda");
    expect_c(r.lambda_n(3), 6 * v, 1e-12, "lambda_n");
  }
}

TEST(NuQuantize, SpinInstanceMatchesEnergyEquation) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uM(0.5, 3.0), uw(0.2, 1.5), ue(0.0, 1.5),
      uC(-5.0, 2.0), uE(-1.0, 4.0);
  std::uniform_int_distribution<int> un(0, 8);
  int checked = 0;
  while (checked < 50) {
    ModelParams p;
    p.M = uM(rng);
    p.omega0 = uw(rng);
    p.eps = ue(rng);
    p.C = uC(rng);
    const double E = uE(rng);
    const int n = un(rng);
    const auto d = dirac_instance(p, E);
    if (d.gamma <= 0.0)
      continue;
    const auto red = reduce(kUnitSigma, d.sigma_tilde, kZeroTau).front();
    const double g = derived_constants(p).g_shift;
    const double v = std::sqrt(d.v2);
    const double want = d.gamma * ((E - p.M + g) - (v / d.gamma) * (2 * n + 1));
    const cplx got = quantize(red, n);
    EXPECT_LE(std::abs(got - want), 1e-12 * std::max(1.0, d.gamma * (std::abs(E) + p.M + g)))
        << "M=" << p.M << " E=" << E << " n=" << n;
    ++checked;
  }
}

TEST(NuQuantize, SpinLevelIsEigenvalue) {
  ModelParams p;
  p.M = 1.5;
  p.omega0 = 1.0 / 2.4;
  p.eps = 0.5;
  for (int n = 0; n < 4; ++n) {
    const auto lv = solve_level(p, n);
    ASSERT_TRUE(lv.bound());
    const auto d = dirac_instance(p, lv.E);
    const auto red = reduce(kUnitSigma, d.sigma_tilde, kZeroTau).front();
    EXPECT_LE(std::abs(quantize(red, n)), 1e-10);
  }
}

// At the tabulated pseudospin energies gamma~ < 0, so v~^2 < 0 and every
// branch is real. The tau' < 0 branch vanishes at the companion root
// (E + M + g' > 0); the tabulated level is the zero of the tau' > 0 branch.
TEST(NuQuantize, PseudospinBranchesAtTabulatedEnergies) {
  ModelParams p;
  p.M = 1.5;
  p.omega0 = 1.0 / 2.4;
  p.sym = SymmetryKind::Pseudospin;
  p.C = -10.3;
  for (int n = 0; n < 3; ++n) {
    const auto lv = solve_level(p, n);
    ASSERT_TRUE(lv.bound());
    const auto d = dirac_instance(p, lv.E);
    EXPECT_LT(d.v2, 0.0);
    const auto br = enumerate_branches(kUnitSigma, d.sigma_tilde, kZeroTau);
    ASSERT_EQ(br.size(), 2u);
    EXPECT_TRUE(br[0].is_real());
    EXPECT_GT(std::abs(quantize(br[0], n)), 1.0);
    EXPECT_LE(std::abs(quantize(br[1], n)), 1e-12);

    for (const auto &alt : lv.alternates) {
      if (alt.reason != RejectReason::PrincipalBranch)
        continue;
      const auto da = dirac_instance(p, alt.value.real());
      const auto ba = enumerate_branches(kUnitSigma, da.sigma_tilde, kZeroTau);
      EXPECT_LE(std::abs(quantize(ba[0], n)), 1e-12);
    }
  }
}

TEST(DiracInstance, Coefficients) {
  ModelParams p;
  p.M = 1.5;
  p.omega0 = 0.5;
  p.eps = 0.4;
  p.C = 0.2;
  auto d = dirac_instance(p, 1.1);
  EXPECT_DOUBLE_EQ(d.gamma, 1.5 + 1.1 - 0.2);
  EXPECT_DOUBLE_EQ(d.v2, 0.5 * 1.5 * 0.25 * d.gamma);
  EXPECT_DOUBLE_EQ(d.beta, 0.4 * d.gamma);
  EXPECT_DOUBLE_EQ(d.alpha, d.gamma * (1.5 - 1.1));
  EXPECT_EQ(d.sigma_tilde.c2, -d.v2);
  EXPECT_EQ(d.sigma_tilde.c1, d.beta);
  EXPECT_EQ(d.sigma_tilde.c0, -d.alpha);

  p.sym = SymmetryKind::Pseudospin;
  d = dirac_instance(p, -1.1);
  EXPECT_DOUBLE_EQ(d.gamma, 1.5 + 1.1 + 0.2);
  EXPECT_DOUBLE_EQ(d.alpha, d.gamma * (1.5 - 1.1));
  EXPECT_EQ(d.sigma_tilde.c2, d.v2);
  EXPECT_EQ(d.sigma_tilde.c1, -d.beta);
  EXPECT_EQ(d.sigma_tilde.c0, -d.alpha);
}
