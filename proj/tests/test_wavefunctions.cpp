#include "starkdirac/special_functions.hpp"
#include "starkdirac/wavefunctions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace starkdirac;

namespace {

ModelParams table(SymmetryKind sym, double C, double eps) {
  ModelParams p;
  p.M = 1.5;
  p.omega0 = 1.0 / 2.4;
  p.sym = sym;
  p.C = C;
  p.eps = eps;
  return p;
}

EnergyLevel spin_level(double eps, int n) {
  return solve_level(table(SymmetryKind::Spin, 0.0, eps), n);
}

double lambda_of(const ModelParams &p) { return std::sqrt(p.M * p.omega0); }

SampleGrid full_line(const ModelParams &p, double half_width, int count = 8001) {
  const double r0 = derived_constants(p).r0;
  return {r0 - half_width, r0 + half_width, count};
}

} // namespace

TEST(ShapeConstants, SpinValues) {
  const auto lv = spin_level(0.5, 0);
  const auto c = shape_constants(lv);
  EXPECT_NEAR(c.lambda_scale, std::sqrt(1.5 / 2.4), 1e-15);
  EXPECT_NEAR(c.b, 0.5 * 2.4, 1e-15);
  EXPECT_NEAR(c.r0, derived_constants(lv.params).r0, 1e-12);
  EXPECT_NEAR(c.gamma, 1.5 + lv.E, 1e-15);
  EXPECT_NEAR(c.v, std::sqrt(0.5 * 1.5 * c.gamma) / 2.4, 1e-15);
  EXPECT_NEAR(c.eps1, std::sqrt(c.gamma / 3.0), 1e-15);
  EXPECT_NEAR(c.eps2, c.gamma / (3.0 * c.v), 1e-15);
  EXPECT_NEAR(c.d0, 1.0 / c.gamma, 1e-15);
}

TEST(ShapeConstants, Errors) {
  const auto gone = solve_level(table(SymmetryKind::Pseudospin, -10.3, 2.0), 0);
  ASSERT_FALSE(gone.bound());
  EXPECT_THROW(shape_constants(gone), ConstantsUndefined);
  EXPECT_THROW(pseudo_lower_G(gone, 1.0), ConstantsUndefined);
  const auto sp = spin_level(0.0, 0);
  EXPECT_THROW(pseudo_lower_G(sp, 1.0), ConstantsUndefined);
  const auto ps = solve_level(table(SymmetryKind::Pseudospin, -10.3, 0.0), 0);
  EXPECT_THROW(upper_spinor_F(ps, 1.0), ConstantsUndefined);
}

TEST(UpperSpinor, ZeroFieldGroundStateIsCentredGaussian) {
  const auto lv = spin_level(0.0, 0);
  const auto c = shape_constants(lv);
  const double l2 = c.lambda_scale * c.lambda_scale;
  const double f0 = upper_spinor_F(lv, 0.0);
  for (double r : {0.3, 1.0, 2.5, 6.0})
    EXPECT_NEAR(upper_spinor_F(lv, r) / f0, std::exp(-0.5 * c.eps1 * l2 * r * r), 1e-14);
}

TEST(UpperSpinor, PolynomialArgumentMinimalAtWellBottom) {
  for (double eps : {0.5, 1.0, 1.5}) {
    const auto lv = spin_level(eps, 2);
    const auto c = shape_constants(lv);
    EXPECT_NEAR(c.b / (c.lambda_scale * c.lambda_scale), derived_constants(lv.params).r0, 1e-12);
  }
}

TEST(UpperSpinor, NormalizedOnWindow) {
  const auto lv = spin_level(0.5, 0);
  const auto f = sample_upper_F(lv, {0.0, 40.0, 4001}, true);
  EXPECT_TRUE(f.normalized);
  EXPECT_EQ(f.kind, RadialKind::UpperF);
  EXPECT_NEAR(l2_norm_squared(f), 1.0, 1e-8);
  EXPECT_EQ(f.samples.front().r, 0.0);
  EXPECT_EQ(f.samples.back().r, 40.0);
  EXPECT_EQ(f.samples.size() % 2, 1u);
}

TEST(UpperSpinor, BoundaryDefectDiagnostic) {
  const auto g0 = sample_upper_F(spin_level(0.0, 0), {0.0, 30.0, 2001}, true);
  EXPECT_NEAR(boundary_defect(g0), 1.0, 1e-12);
  const auto g2 = sample_upper_F(spin_level(2.0, 0), {0.0, 30.0, 2001}, true);
  EXPECT_LT(boundary_defect(g2), 1.0);
  EXPECT_GT(boundary_defect(g2), 0.0);
}

TEST(NonRelativistic, GroundStateShape) {
  auto p = table(SymmetryKind::Spin, 0.0, 0.0);
  const double lam = lambda_of(p);
  for (double r : {0.0, 0.5, 2.0}) {
    const double want = std::pow(lam * lam / M_PI, 0.25) * std::exp(-0.5 * lam * lam * r * r);
    EXPECT_NEAR(nr_radial_R(p, 0, r), want, 1e-15);
  }
  p.eps = 1.0;
  const double r0 = derived_constants(p).r0;
  const double peak = nr_radial_R(p, 0, r0);
  EXPECT_GT(peak, nr_radial_R(p, 0, r0 - 1e-3));
  EXPECT_GT(peak, nr_radial_R(p, 0, r0 + 1e-3));
}

TEST(NonRelativistic, TranslationCovariance) {
  const auto p0 = table(SymmetryKind::Spin, 0.0, 0.0);
  for (double eps : {0.5, 1.0, 2.0}) {
    auto p = p0;
    p.eps = eps;
    const double r0 = derived_constants(p).r0;
    for (int n = 0; n <= 6; ++n)
      for (double r = 0.0; r < 20.0; r += 0.731)
        EXPECT_EQ(nr_radial_R(p, n, r), nr_radial_R(p0, n, r - r0));
  }
}

TEST(NonRelativistic, NodeCountEqualsIndex) {
  for (double eps : {0.0, 0.5, 1.0, 2.0}) {
    const auto p = table(SymmetryKind::Spin, 0.0, eps);
    const double lam = lambda_of(p);
    for (int n = 0; n <= 10; ++n) {
      const auto f = sample_nr_R(p, n, full_line(p, 8.0 / lam), true);
      EXPECT_EQ(f.nodes, n) << "eps=" << eps;
      EXPECT_NEAR(l2_norm_squared(f), 1.0, 1e-8);
    }
  }
}

TEST(NonRelativistic, AnalyticNormalization) {
  const auto p = table(SymmetryKind::Spin, 0.0, 1.0);
  const double lam = lambda_of(p);
  for (int n = 0; n <= 10; ++n) {
    const auto f = sample_nr_R(p, n, full_line(p, 12.0 / lam), false);
    EXPECT_NEAR(f.norm, 1.0, 1e-8) << "n=" << n;
  }
}

TEST(NonRelativistic, Orthogonality) {
  const auto p = table(SymmetryKind::Spin, 0.0, 0.5);
  const double L = 12.0 / lambda_of(p);
  const auto g = full_line(p, L);
  std::vector<RadialFunction> fs;
  for (int n = 0; n <= 5; ++n)
    fs.push_back(sample_nr_R(p, n, g, false));
  const double h = (g.r_hi - g.r_lo) / (fs[0].samples.size() - 1);
  for (int m = 0; m <= 5; ++m)
    for (int n = m + 1; n <= 5; ++n) {
      std::vector<double> y;
      for (size_t i = 0; i < fs[m].samples.size(); ++i)
        y.push_back(fs[m].samples[i].value.real() * fs[n].samples[i].value.real());
      EXPECT_LE(std::abs(simpson(y, h)), 1e-6) << m << "," << n;
    }
}

TEST(NonRelativistic, MeanRadiusIsWellBottom) {
  const auto p = table(SymmetryKind::Spin, 0.0, 1.0);
  const auto f = sample_nr_R(p, 2, full_line(p, 12.0 / lambda_of(p)), true);
  EXPECT_NEAR(mean_radius(f), derived_constants(p).r0, 1e-8);
}

TEST(LowerSpinor, GroundStateReduction) {
  const auto lv = spin_level(0.0, 0);
  const auto c = shape_constants(lv);
  const double l2 = c.lambda_scale * c.lambda_scale;
  for (double r : {0.1, 0.5, 1.0, 3.0}) {
    const double want = c.d0 * (-c.eps1 * l2 * r - 1.0 / r) * upper_spinor_F(lv, r);
    EXPECT_NEAR(lower_spinor_G(lv, r), want, 1e-7 * std::max(1.0, std::abs(want)));
  }
}

TEST(LowerSpinor, SingularAtOrigin) {
  const auto lv = spin_level(0.0, 1);
  EXPECT_THROW(lower_spinor_G(lv, 0.0), SingularAtOrigin);
  EXPECT_THROW(lower_spinor_G_closed_form(lv, 1e-9), SingularAtOrigin);
  EXPECT_NO_THROW(lower_spinor_G(lv, 1e-8));
}

TEST(LowerSpinor, DecaysAtLargeRadius) {
  for (int n = 0; n < 3; ++n) {
    const auto lv = spin_level(0.5, n);
    EXPECT_LT(std::abs(lower_spinor_G(lv, 40.0)), 1e-12);
  }
}

TEST(LowerSpinor, DeviationProfileIsStable) {
  for (double eps : {0.0, 0.5}) {
    for (int n = 0; n < 4; ++n) {
      const auto lv = spin_level(eps, n);
      const auto prof = g_deviation_profile(lv, 0.1, 20.0, 200);
      ASSERT_EQ(prof.size(), 200u);
      EXPECT_DOUBLE_EQ(prof.front().r, 0.1);
      EXPECT_DOUBLE_EQ(prof.back().r, 20.0);
      for (const auto &d : prof) {
        EXPECT_LE(d.richardson_gap, 1e-6) << "r=" << d.r;
        EXPECT_TRUE(std::isfinite(d.closed_form));
      }
    }
  }
}

TEST(LowerSpinor, SampledFromPositiveRadius) {
  const auto lv = spin_level(0.5, 1);
  const auto g = sample_lower_G(lv, {0.0, 20.0, 1001}, true);
  EXPECT_EQ(g.kind, RadialKind::LowerG);
  EXPECT_GE(g.samples.front().r, 1e-8);
  EXPECT_NEAR(l2_norm_squared(g), 1.0, 1e-8);
}

TEST(PseudoLowerSpinor, GroundStateModulus) {
  const auto lv = solve_level(table(SymmetryKind::Pseudospin, -10.3, 0.5), 0);
  ASSERT_TRUE(lv.bound());
  const auto c = shape_constants(lv);
  const double l2 = c.lambda_scale * c.lambda_scale;
  const std::complex<double> I{0.0, 1.0};
  for (double r : {0.0, 0.7, 2.0, 5.0}) {
    const double want = std::exp((I * c.eps1p * (-c.b * r + 0.5 * l2 * r * r)).real());
    EXPECT_NEAR(std::abs(pseudo_lower_G(lv, r)), want, 1e-13 * std::max(1.0, want));
  }
}

TEST(PseudoLowerSpinor, RealnessDefectReported) {
  const auto lv = solve_level(table(SymmetryKind::Pseudospin, -10.3, 0.0), 1);
  ASSERT_TRUE(lv.bound());
  const auto f = sample_pseudo_G(lv, default_grid(lv.params, 2001), false);
  EXPECT_EQ(f.kind, RadialKind::PseudoLowerG);
  const double d = realness_defect(f);
  EXPECT_TRUE(std::isfinite(d));
  EXPECT_GE(d, 0.0);
  EXPECT_LE(d, 1.0);
}

TEST(Sampling, DefaultGridAndKindNames) {
  const auto p = table(SymmetryKind::Spin, 0.0, 1.0);
  const auto g = default_grid(p);
  EXPECT_EQ(g.r_lo, 0.0);
  EXPECT_NEAR(g.r_hi, derived_constants(p).r0 + 20.0 / lambda_of(p), 1e-12);
  EXPECT_EQ(to_string(RadialKind::UpperF), "F");
  EXPECT_EQ(to_string(RadialKind::LowerG), "G");
  EXPECT_EQ(to_string(RadialKind::NonRelR), "R");
  EXPECT_EQ(to_string(RadialKind::PseudoLowerG), "Gps");
  // even counts are rounded up so Simpson sees an odd number of samples
  const auto f = sample_nr_R(p, 0, {0.0, 1.0, 10}, false);
  EXPECT_EQ(f.samples.size(), 11u);
}

TEST(Sampling, CountNodes) {
  std::vector<RadialSample> s{{0, 1.0}, {1, 0.0}, {2, -1.0}, {3, -2.0}, {4, 0.0}, {5, 3.0}};
  EXPECT_EQ(count_nodes(s), 2);
}
