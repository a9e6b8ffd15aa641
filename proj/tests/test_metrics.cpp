#include "helpers.hpp"

#include "sjgeo/metrics.hpp"
#include "sjgeo/oracles.hpp"

using namespace sjgeo;

namespace {

const cdouble I(0.0, 1.0);

Tangent random_tangent(Model model, std::size_t n, std::size_t m, Rng& rng) {
  return {model, rng.complex_symmetric(n, -1, 1), rng.complex_matrix(m, n, -1, 1)};
}

double rel(double a, double b) { return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b))); }

}  // namespace

TEST(QSiegel, ClosedForms) {
  EXPECT_NEAR(q_siegel(scalar_matrix(I), scalar_matrix(1.0)), 1.0, 1e-15);
  EXPECT_EQ(q_siegel(I * CMatrix::identity(2), CMatrix(2, 2)), 0.0);
}

TEST(QSiegel, PolarizationAtN2) {
  Rng rng(1);
  const UpperPoint p = random_upper_point(2, 0, rng);
  const ChartLayout layout{2, 0};
  const RVector x = to_chart(p.omega, p.z);
  const RMatrix g = metric_tensor(MetricKind::siegel, layout, x, {}).g;
  for (int k = 0; k < 10; ++k) {
    RVector v(layout.dim());
    for (double& e : v) e = rng.uniform(-1, 1);
    double vgv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) vgv += v[i] * g(i, j) * v[j];
    EXPECT_LT(rel(vgv, q_siegel(p.omega, tangent_from_chart(Model::upper, layout, v).dmat)), 1e-9);
  }
}

TEST(QUpper, AtBasePoint) {
  Rng rng(2);
  const MetricParams params{0.7, 2.5};
  const UpperPoint p{I * CMatrix::identity(2), CMatrix(2, 2)};
  const Tangent t = random_tangent(Model::upper, 2, 2, rng);
  const double want = params.a * trace(t.dmat * conj(t.dmat)).real() +
                      params.b * trace(transpose(t.dvec) * conj(t.dvec)).real();
  EXPECT_NEAR(q_upper(p, t, params), want, 1e-13);
  EXPECT_EQ(q_upper(p, {Model::upper, CMatrix(2, 2), CMatrix(2, 2)}, params), 0.0);
}

TEST(QUpper, Invariance) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const JacobiElement g = random_jacobi(2, 2, rng);
    const UpperPoint p = random_upper_point(2, 2, rng);
    const Tangent t = random_tangent(Model::upper, 2, 2, rng);
    EXPECT_LT(rel(q_upper(act_upper(g, p), pushforward(g, p, t), {}), q_upper(p, t, {})), 1e-5);
  }
}

TEST(QDiskN, ClosedForms) {
  EXPECT_NEAR(q_disk_n(scalar_matrix(0.0), scalar_matrix(1.0)), 4.0, 1e-15);
  EXPECT_EQ(q_disk_n(CMatrix(2, 2), CMatrix(2, 2)), 0.0);
}

TEST(QDisk, ClosedFormsAtOrigin) {
  const DiskPoint o{CMatrix(1, 1), CMatrix(1, 1)};
  EXPECT_NEAR(q_disk(o, {Model::disk, scalar_matrix(1.0), scalar_matrix(0.0)}, {}), 4.0, 1e-15);
  EXPECT_NEAR(q_disk(o, {Model::disk, scalar_matrix(0.0), scalar_matrix(1.0)}, {}), 4.0, 1e-15);
}

TEST(QDisk, InvarianceAndPositivity) {
  Rng rng(4);
  const MetricParams params{1.3, 0.4};
  for (int k = 0; k < 100; ++k) {
    const JacobiStarElement g = theta_map(random_jacobi(2, 1, rng));
    const DiskPoint p = random_disk_point(2, 1, rng);
    const Tangent t = random_tangent(Model::disk, 2, 1, rng);
    const double q = q_disk(p, t, params);
    EXPECT_GT(q, 0.0);
    EXPECT_LT(rel(q_disk(act_disk(g, p), pushforward(g, p, t), params), q), 1e-5);
  }
}

TEST(QDisk, CayleyPullbackOfUpperMetric) {
  Rng rng(5);
  const MetricParams params{0.6, 1.7};
  for (int k = 0; k < 100; ++k) {
    const DiskPoint p = random_disk_point(2, 2, rng);
    const Tangent t = random_tangent(Model::disk, 2, 2, rng);
    EXPECT_LT(rel(q_upper(cayley(p), cayley_pushforward(p, t), params), q_disk(p, t, params)), 1e-5);
  }
}

TEST(QDisk, FrameFormAgrees) {
  Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    const DiskPoint p = random_disk_point(3, 2, rng);
    const Tangent t = random_tangent(Model::disk, 3, 2, rng);
    EXPECT_LT(rel(q_disk_frame(p, t, {2.0, 0.5}), q_disk(p, t, {2.0, 0.5})), 1e-10);
  }
}

// The A part is A·q_disk_n, so q_disk is affine in B with intercept A·q_disk_n.
TEST(QDisk, BToZeroLimit) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const DiskPoint p = random_disk_point(2, 2, rng);
    const Tangent t = random_tangent(Model::disk, 2, 2, rng);
    const double a = 1.7;
    const double q1 = q_disk(p, t, {a, 1.0}), q2 = q_disk(p, t, {a, 2.0});
    EXPECT_LT(rel(2.0 * q1 - q2, a * q_disk_n(p.w, t.dmat)), 1e-12);
  }
}

TEST(QDisk, MatchesN1Display) {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const DiskPoint p = random_disk_point(1, 1, rng);
    const Tangent t = random_tangent(Model::disk, 1, 1, rng);
    EXPECT_LT(rel(q_disk(p, t, {}), q_disk_n1_display(p.w(0, 0), p.eta(0, 0), t.dmat(0, 0), t.dvec(0, 0))), 1e-12);
  }
}

TEST(MetricTensor, OriginIsFourTimesIdentity) {
  const MetricTensor g = metric_tensor(DiskPoint{CMatrix(1, 1), CMatrix(1, 1)}, {});
  EXPECT_EQ(g.dim, 4u);
  EXPECT_EQ(g.ordering, "canonical-v1");
  EXPECT_MAT_NEAR(g.g, 4.0 * RMatrix::identity(4), 1e-14);
}

TEST(MetricTensor, QuadraticFormAndPositivity) {
  Rng rng(9);
  const ChartLayout layout{2, 2};
  for (int k = 0; k < 100; ++k) {
    const DiskPoint p = random_disk_point(2, 2, rng);
    const RMatrix g = metric_tensor(p, {}).g;
    EXPECT_GT(symmetric_eigenvalues(g).front(), 0.0);
    if (k >= 50) continue;
    RVector v(layout.dim());
    for (double& e : v) e = rng.uniform(-1, 1);
    double vgv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) vgv += v[i] * g(i, j) * v[j];
    EXPECT_LT(rel(vgv, q_disk(p, tangent_from_chart(Model::disk, layout, v), {})), 1e-9);
  }
}

TEST(Metrics, RejectBadInput) {
  EXPECT_THROW(require_valid(MetricParams{0.0, 1.0}), InvalidInput);
  const DiskPoint p{CMatrix(2, 2), CMatrix(1, 2)};
  EXPECT_THROW(q_disk(p, {Model::disk, CMatrix(1, 1), CMatrix(1, 2)}, {}), Error);
}
