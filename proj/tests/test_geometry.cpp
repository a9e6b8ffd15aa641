#include "helpers.hpp"

#include "sjgeo/geometry.hpp"

using namespace sjgeo;

namespace {

const cdouble I(0.0, 1.0);

double point_diff(const UpperPoint& a, const UpperPoint& b) {
  return std::max(max_abs_diff(a.omega, b.omega), max_abs_diff(a.z, b.z));
}
double point_diff(const DiskPoint& a, const DiskPoint& b) {
  return std::max(max_abs_diff(a.w, b.w), max_abs_diff(a.eta, b.eta));
}

}  // namespace

TEST(Siegel, IdentityAndJFixesI) {
  const CMatrix om = I * CMatrix::identity(2);
  EXPECT_MAT_NEAR(act_siegel(sp_identity(2), om), om, 0.0);
  EXPECT_MAT_NEAR(act_siegel(SpElement::from_matrix(j_matrix(2)), om), om, 1e-15);
}

TEST(Siegel, ActionAxiom) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const SpElement a = random_sp(2, rng), b = random_sp(2, rng);
    const CMatrix om = random_upper_point(2, 1, rng).omega;
    const CMatrix lhs = act_siegel(sp_mul(a, b), om);
    EXPECT_LE(max_abs_diff(lhs, act_siegel(a, act_siegel(b, om))), 1e-9 * (1.0 + max_abs(lhs)));
  }
}

TEST(UpperAction, IdentityAndTranslation) {
  Rng rng(8);
  const UpperPoint p = random_upper_point(2, 2, rng);
  EXPECT_EQ(point_diff(act_upper(jacobi_identity(2, 2), p), p), 0.0);
  JacobiElement t = jacobi_identity(2, 2);
  t.h = random_heisenberg(2, 2, rng);
  const UpperPoint q = act_upper(t, p);
  EXPECT_MAT_NEAR(q.omega, p.omega, 1e-15);
  EXPECT_MAT_NEAR(q.z, p.z + complexify(t.h.lambda) * p.omega + complexify(t.h.mu), 1e-14);
}

TEST(UpperAction, AxiomAndDomain) {
  Rng rng(12);
  for (int k = 0; k < 100; ++k) {
    const auto g1 = random_jacobi(2, 1, rng), g2 = random_jacobi(2, 1, rng);
    const UpperPoint p = random_upper_point(2, 1, rng);
    const UpperPoint lhs = act_upper(jacobi_mul(g1, g2), p);
    EXPECT_LE(point_diff(lhs, act_upper(g1, act_upper(g2, p))), 1e-9 * (1.0 + max_abs(lhs.omega) + max_abs(lhs.z)));
    EXPECT_EQ(upper_violation(lhs), "");
  }
}

TEST(DiskAction, IdentityAndRotationFixesOrigin) {
  Rng rng(14);
  const DiskPoint p = random_disk_point(2, 1, rng);
  EXPECT_LE(point_diff(act_disk(jacobistar_identity(2, 1), p), p), 1e-15);
  JacobiStarElement g = jacobistar_identity(2, 1);
  g.g.p = I * CMatrix::identity(2);
  const DiskPoint origin{CMatrix(2, 2), CMatrix(1, 2)};
  EXPECT_LE(point_diff(act_disk(g, origin), origin), 0.0);
}

TEST(DiskAction, AxiomAndDomain) {
  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const auto s1 = theta_map(random_jacobi(2, 2, rng)), s2 = theta_map(random_jacobi(2, 2, rng));
    const DiskPoint p = random_disk_point(2, 2, rng);
    const DiskPoint lhs = act_disk(jacobistar_mul(s1, s2), p);
    EXPECT_LE(point_diff(lhs, act_disk(s1, act_disk(s2, p))), 1e-9 * (1.0 + max_abs(lhs.eta)));
    EXPECT_EQ(disk_violation(lhs), "");
  }
}

TEST(Cayley, OriginAndScalarValues) {
  const UpperPoint o = cayley({CMatrix(2, 2), CMatrix(1, 2)});
  EXPECT_MAT_NEAR(o.omega, I * CMatrix::identity(2), 1e-15);
  EXPECT_LE(max_abs(o.z), 0.0);
  const UpperPoint h = cayley({scalar_matrix(0.5), CMatrix(1, 1)});
  EXPECT_LT(std::abs(h.omega(0, 0) - 3.0 * I), 1e-15);
  const DiskPoint d = cayley_inv({scalar_matrix(3.0 * I), CMatrix(1, 1)});
  EXPECT_LT(std::abs(d.w(0, 0) - 0.5), 1e-15);
  const DiskPoint z = cayley_inv({I * CMatrix::identity(2), CMatrix(2, 2)});
  EXPECT_LE(max_abs(z.w), 1e-15);
}

TEST(Cayley, RoundTrips) {
  Rng rng(21);
  for (int k = 0; k < 100; ++k) {
    const DiskPoint d = random_disk_point(2, 2, rng);
    EXPECT_LE(point_diff(cayley_inv(cayley(d)), d), 1e-10);
    const UpperPoint p = random_upper_point(2, 2, rng);
    EXPECT_LE(point_diff(cayley(cayley_inv(p)), p), 1e-10 * (1.0 + max_abs(p.z)));
  }
}

TEST(Cayley, Compatibility) {
  Rng rng(22);
  EXPECT_LE(check_cayley_compat(jacobi_identity(2, 2), random_disk_point(2, 2, rng)), 1e-14);
  EXPECT_LE(check_cayley_compat(random_jacobi(1, 1, rng), {CMatrix(1, 1), CMatrix(1, 1)}), 1e-9);
  for (int k = 0; k < 100; ++k) {
    const JacobiElement g = random_jacobi(2, 2, rng);
    const DiskPoint d = random_disk_point(2, 2, rng);
    const UpperPoint q = act_upper(g, cayley(d));
    EXPECT_LE(check_cayley_compat(g, d), 1e-9 * (1.0 + max_abs(q.omega) + max_abs(q.z)));
  }
}

TEST(HarishChandra, MatchesDiskAction) {
  Rng rng(25);
  const DiskPoint p0 = random_disk_point(2, 1, rng);
  EXPECT_LE(point_diff(hc_pplus_component(jacobistar_identity(2, 1), p0), p0), 1e-15);
  for (int k = 0; k < 100; ++k) {
    const auto g = theta_map(random_jacobi(2, 2, rng));
    const DiskPoint p = random_disk_point(2, 2, rng);
    const DiskPoint want = act_disk(g, p);
    EXPECT_LE(point_diff(hc_pplus_component(g, p), want), 1e-9 * (1.0 + max_abs(want.eta)));
  }
  // Q = 0, diagonal P: W' = P W P̄⁻¹
  JacobiStarElement g = jacobistar_identity(2, 1);
  g.g.p = CMatrix{{std::polar(1.0, 0.3), 0.0}, {0.0, std::polar(1.0, -1.1)}};
  const DiskPoint p = random_disk_point(2, 1, rng);
  EXPECT_LE(point_diff(hc_pplus_component(g, p), act_disk(g, p)), 1e-14);
  EXPECT_MAT_NEAR(act_disk(g, p).w, g.g.p * p.w * inverse(conj(g.g.p)), 1e-14);
}

TEST(Sampling, DeterministicAndValid) {
  EXPECT_EQ(point_diff(random_disk_point(2, 2, 7), random_disk_point(2, 2, 7)), 0.0);
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const DiskPoint d = random_disk_point(3, 2, s);
    ASSERT_EQ(disk_violation(d), "") << "seed " << s;
    ASSERT_GE(disk_margin(d.w), 0.1);
    ASSERT_EQ(upper_violation(random_upper_point(3, 2, s)), "") << "seed " << s;
  }
}

TEST(Validation, NamesTheInvariant) {
  const DiskPoint bad{scalar_matrix(1.5), CMatrix(1, 1)};
  EXPECT_NE(disk_violation(bad), "");
  EXPECT_THROW(require_valid(bad), InvalidInput);
  const UpperPoint low{scalar_matrix(cdouble(0.0, -1.0)), CMatrix(1, 1)};
  EXPECT_THROW(require_valid(low), InvalidInput);
  const UpperPoint asym{CMatrix{{I, 1.0}, {0.0, I}}, CMatrix(1, 2)};
  EXPECT_NE(upper_violation(asym), "");
}

TEST(Identities, YAndVFromDisk) {
  Rng rng(29);
  for (int k = 0; k < 20; ++k) {
    const DiskPoint d = random_disk_point(2, 2, rng);
    const UpperPoint p = cayley(d);
    EXPECT_MAT_NEAR(p.y(), y_from_disk(d), 1e-10);
    EXPECT_MAT_NEAR(p.v(), v_from_disk(d), 1e-10);
  }
}
