#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hermangle/selftest.hpp"
#include "hermangle/subspaces.hpp"

using namespace hermangle;
using std::numbers::pi;

namespace
{

const double rs2 = 1.0 / std::sqrt(2.0);
const double slant_kahler = std::acos(1.0 / std::sqrt(3.0));

RealVector unit(std::size_t dim, std::size_t k)
{
  std::vector<double> v(dim, 0.0);
  v[k] = 1.0;
  return RealVector(std::move(v));
}

void expect_near(const RealVector& got, std::initializer_list<double> want, double tol = 1e-15)
{
  ASSERT_EQ(got.size(), want.size());
  std::size_t k = 0;
  for (double w : want) EXPECT_NEAR(got[k++], w, tol) << "component " << k - 1;
}

TwoPlane slant_plane() { return plane_from_pair(RealVector{1, 0, 0, 0}, RealVector{0.5, 0.5, rs2, 0}); }

} // namespace

TEST(TwoPlaneType, ValidatesOrthonormality)
{
  EXPECT_NO_THROW(TwoPlane::from_orthonormal(unit(4, 0), unit(4, 1)));
  EXPECT_THROW(TwoPlane::from_orthonormal(unit(4, 0), RealVector{1, 1, 0, 0}), InvalidArgument);
  EXPECT_THROW(TwoPlane::from_orthonormal(unit(4, 0), RealVector{0, 2, 0, 0}), InvalidArgument);
  EXPECT_THROW(TwoPlane::from_orthonormal(unit(3, 0), unit(3, 1)), InvalidArgument);
  EXPECT_THROW(TwoPlane::from_orthonormal(unit(4, 0), unit(6, 1)), DimensionMismatch);
}

TEST(PlaneFromPair, Examples)
{
  TwoPlane p = plane_from_pair(RealVector{1, 0, 0, 0}, RealVector{0, 1, 0, 0});
  expect_near(p.span_u(), {1, 0, 0, 0});
  expect_near(p.span_v(), {0, 1, 0, 0});

  p = plane_from_pair(RealVector{2, 0, 0, 0}, RealVector{2, 2, 0, 0});
  expect_near(p.span_u(), {1, 0, 0, 0});
  expect_near(p.span_v(), {0, 1, 0, 0});

  p = slant_plane();
  expect_near(p.span_u(), {1, 0, 0, 0});
  expect_near(p.span_v(), {0, 1 / std::sqrt(3.0), std::sqrt(2.0) / std::sqrt(3.0), 0});
}

TEST(PlaneFromPair, RejectsDegeneratePairs)
{
  EXPECT_THROW(plane_from_pair(RealVector{1, 0, 0, 0}, RealVector{-3, 0, 0, 0}), DegenerateInput);
  EXPECT_THROW(plane_from_pair(RealVector{0, 0, 0, 0}, RealVector{1, 0, 0, 0}), DegenerateInput);
  EXPECT_THROW(plane_from_pair(RealVector{1, 0, 0, 0}, RealVector{1, 1e-12, 0, 0}), DegenerateInput);
  EXPECT_NO_THROW(plane_from_pair(RealVector{1, 0, 0, 0}, RealVector{1, 1e-12, 0, 0}, 1e-13));
  EXPECT_THROW(plane_from_pair(RealVector{1, 0, 0, 0}, RealVector{0, 1}), DimensionMismatch);
}

TEST(PlaneFromPair, PreservesOrientationAndIsOrthonormal)
{
  sampling::Rng rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = 2 * (2 + trial % 3);
    const RealVector A = sampling::random_real(rng, dim);
    const RealVector B = sampling::random_real(rng, dim);
    const TwoPlane p = plane_from_pair(A, B);
    EXPECT_NEAR(norm(p.span_u()), 1.0, 1e-14);
    EXPECT_NEAR(norm(p.span_v()), 1.0, 1e-14);
    EXPECT_NEAR(real_inner(p.span_u(), p.span_v()), 0.0, 1e-14);
    // B has a positive coefficient along v
    EXPECT_GT(real_inner(B, p.span_v()), 0.0);
    EXPECT_GT(real_inner(A, p.span_u()), 0.0);
  }
}

TEST(KahlerAngleOfPlane, Examples)
{
  const TwoPlane holo = TwoPlane::from_orthonormal(unit(4, 0), apply_j(unit(4, 0)));
  EXPECT_EQ(kahler_angle_of_plane(holo), 0.0);
  const TwoPlane anti = plane_from_pair(embed(ComplexVector{1.0, 0.0}), embed(ComplexVector{0.0, 1.0}));
  EXPECT_NEAR(kahler_angle_of_plane(anti), pi / 2, 1e-15);
  EXPECT_NEAR(kahler_angle_of_plane(slant_plane()), slant_kahler, 1e-15);
}

TEST(KahlerAngleOfPlane, AgreesWithVectorPairVersion)
{
  sampling::Rng rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    const ComplexVector a = sampling::random_complex(rng, 3);
    const ComplexVector b = sampling::random_complex(rng, 3);
    EXPECT_NEAR(kahler_angle_of_plane(plane_from_pair(a, b)), *kahler_angle(a, b), 1e-12);
  }
}

TEST(KahlerAngleOfPlane, IntrinsicToTheOrientedPlane)
{
  sampling::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoPlane p = sampling::random_plane(rng, 2 * (2 + trial % 3));
    const double k = kahler_angle_of_plane(p);
    for (int rep = 0; rep < 20; ++rep) EXPECT_NEAR(kahler_angle_of_plane(sampling::respan(rng, p)), k, 1e-10);
    EXPECT_NEAR(kahler_angle_of_plane(p.reversed()), pi - k, 1e-10);
  }
}

TEST(HolomorphicPlaneOf, Examples)
{
  TwoPlane p = holomorphic_plane_of(ComplexVector{1.0, 0.0});
  expect_near(p.span_u(), {1, 0, 0, 0});
  expect_near(p.span_v(), {0, 1, 0, 0});

  p = holomorphic_plane_of(ComplexVector{0.0, 1.0});
  expect_near(p.span_u(), {0, 0, 1, 0});
  expect_near(p.span_v(), {0, 0, 0, 1});

  p = holomorphic_plane_of(ComplexVector{rs2, rs2});
  expect_near(p.span_u(), {rs2, 0, rs2, 0});
  expect_near(p.span_v(), {0, rs2, 0, rs2});

  EXPECT_THROW(holomorphic_plane_of(ComplexVector{0.0, 0.0}), DegenerateInput);
}

TEST(HolomorphicPlaneOf, HasZeroKahlerAngle)
{
  sampling::Rng rng(67);
  for (int trial = 0; trial < 500; ++trial) {
    EXPECT_LE(kahler_angle_of_plane(holomorphic_plane_of(sampling::random_complex(rng, 1 + trial % 5))), 1e-12);
  }
}

TEST(JImage, Examples)
{
  const TwoPlane holo = holomorphic_plane_of(ComplexVector{{0.3, -0.4}, {1.2, 0.1}});
  const PrincipalAngles same = principal_angles(holo, j_image(holo));
  EXPECT_NEAR(same.alpha_min, 0.0, 1e-12);
  EXPECT_NEAR(same.alpha_max, 0.0, 1e-12);

  const TwoPlane anti = plane_from_pair(unit(4, 0), unit(4, 2));
  const TwoPlane janti = j_image(anti);
  expect_near(janti.span_u(), {0, 1, 0, 0});
  expect_near(janti.span_v(), {0, 0, 0, 1});
  const PrincipalAngles perp = principal_angles(anti, janti);
  EXPECT_NEAR(perp.alpha_min, pi / 2, 1e-15);
  EXPECT_NEAR(perp.alpha_max, pi / 2, 1e-15);

  const TwoPlane s = slant_plane();
  const PrincipalAngles tilted = principal_angles(s, j_image(s));
  EXPECT_NEAR(tilted.alpha_min, slant_kahler, 1e-12);
  EXPECT_NEAR(tilted.alpha_max, slant_kahler, 1e-12);
  const PrincipalAngles scan = stationary_angles_oracle(s, j_image(s), 10000);
  EXPECT_NEAR(scan.alpha_min, slant_kahler, 1e-3);
  EXPECT_NEAR(scan.alpha_max, slant_kahler, 1e-3);
}

TEST(PrincipalAngles, Examples)
{
  const TwoPlane p = slant_plane();
  const PrincipalAngles self = principal_angles(p, p);
  EXPECT_LE(self.alpha_min, 1e-15);
  EXPECT_LE(self.alpha_max, 1e-15);

  const TwoPlane e13 = plane_from_pair(unit(6, 0), unit(6, 2));
  const TwoPlane e15 = plane_from_pair(unit(6, 0), unit(6, 4));
  const PrincipalAngles shared = principal_angles(e13, e15);
  EXPECT_EQ(shared.alpha_min, 0.0);
  EXPECT_EQ(shared.alpha_max, pi / 2);

  const TwoPlane h1 = holomorphic_plane_of(ComplexVector{1.0, 0.0});
  const TwoPlane h2 = holomorphic_plane_of(ComplexVector{rs2, rs2});
  const PrincipalAngles hh = principal_angles(h1, h2);
  EXPECT_NEAR(hh.alpha_min, pi / 4, 1e-15);
  EXPECT_NEAR(hh.alpha_max, pi / 4, 1e-15);
  EXPECT_NEAR(hh.alpha_min, hermitian_angle(ComplexVector{1.0, 0.0}, ComplexVector{rs2, rs2}), 1e-15);

  EXPECT_THROW(principal_angles(p, e13), DimensionMismatch);
}

TEST(PrincipalAngles, SortedInRangeAndSymmetric)
{
  sampling::Rng rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 * (2 + trial % 3);
    const TwoPlane p = sampling::random_plane(rng, dim);
    const TwoPlane q = sampling::random_plane(rng, dim);
    const PrincipalAngles pq = principal_angles(p, q);
    EXPECT_GE(pq.alpha_min, 0.0);
    EXPECT_LE(pq.alpha_min, pq.alpha_max);
    EXPECT_LE(pq.alpha_max, pi / 2);
    const PrincipalAngles qp = principal_angles(q, p);
    EXPECT_NEAR(qp.alpha_min, pq.alpha_min, 1e-12);
    EXPECT_NEAR(qp.alpha_max, pq.alpha_max, 1e-12);
    // orientation does not matter
    const PrincipalAngles rev = principal_angles(p.reversed(), q);
    EXPECT_NEAR(rev.alpha_min, pq.alpha_min, 1e-12);
    EXPECT_NEAR(rev.alpha_max, pq.alpha_max, 1e-12);
  }
}

TEST(PrincipalAngles, AccurateForNearlyCoincidentPlanes)
{
  // q is p tilted by 1e-9 towards E5: stationary angles (0, 1e-9).
  const TwoPlane p = plane_from_pair(unit(6, 0), unit(6, 2));
  const TwoPlane q = plane_from_pair(unit(6, 0), RealVector{0, 0, std::cos(1e-9), 0, std::sin(1e-9), 0}, 1e-12);
  const PrincipalAngles pq = principal_angles(p, q);
  EXPECT_NEAR(pq.alpha_min, 0.0, 1e-20);
  EXPECT_NEAR(pq.alpha_max, 1e-9, 1e-20);
}

TEST(StationaryAnglesOracle, Examples)
{
  const TwoPlane p = slant_plane();
  const PrincipalAngles self = stationary_angles_oracle(p, p, 100);
  EXPECT_NEAR(self.alpha_min, 0.0, 1e-12);
  EXPECT_NEAR(self.alpha_max, 0.0, 1e-7); // arccos near 1 resolves only ~1e-8

  const TwoPlane e13 = plane_from_pair(unit(6, 0), unit(6, 2));
  const TwoPlane e15 = plane_from_pair(unit(6, 0), unit(6, 4));
  const PrincipalAngles shared = stationary_angles_oracle(e13, e15, 10000);
  EXPECT_NEAR(shared.alpha_min, 0.0, 1e-3);
  EXPECT_NEAR(shared.alpha_max, pi / 2, 1e-3);

  const PrincipalAngles hh = stationary_angles_oracle(holomorphic_plane_of(ComplexVector{1.0, 0.0}),
                                                      holomorphic_plane_of(ComplexVector{rs2, rs2}), 10000);
  EXPECT_NEAR(hh.alpha_min, pi / 4, 1e-3);
  EXPECT_NEAR(hh.alpha_max, pi / 4, 1e-3);

  EXPECT_THROW(stationary_angles_oracle(p, p, 1), InvalidArgument);
  EXPECT_THROW(stationary_angles_oracle(p, e13, 100), DimensionMismatch);
}

TEST(StationaryAnglesOracle, AgreesWithSpectralMethod)
{
  sampling::Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 * (2 + trial % 3);
    const TwoPlane p = sampling::random_plane(rng, dim);
    const TwoPlane q = sampling::random_plane(rng, dim);
    const PrincipalAngles spectral = principal_angles(p, q);
    const PrincipalAngles scan = stationary_angles_oracle(p, q, 10000);
    EXPECT_NEAR(spectral.alpha_min, scan.alpha_min, 2e-3);
    EXPECT_NEAR(spectral.alpha_max, scan.alpha_max, 2e-3);
  }
}

TEST(IsIsoclinic, Examples)
{
  const ComplexVector a{1.0, 0.0}, b{rs2, rs2};
  const IsoclinyResult hh = is_isoclinic(holomorphic_plane_of(a), holomorphic_plane_of(b));
  EXPECT_TRUE(hh.isoclinic);
  EXPECT_NEAR(hh.angle, pi / 4, 1e-15);

  const TwoPlane e13 = plane_from_pair(unit(6, 0), unit(6, 2));
  const TwoPlane e15 = plane_from_pair(unit(6, 0), unit(6, 4));
  EXPECT_FALSE(is_isoclinic(e13, e15).isoclinic);

  const TwoPlane s = slant_plane();
  const IsoclinyResult sj = is_isoclinic(s, j_image(s));
  EXPECT_TRUE(sj.isoclinic);
  EXPECT_NEAR(sj.angle, 0.9553166181245093, 1e-12);
}

TEST(IsIsoclinic, ToleranceIsPerCall)
{
  // stationary angles (0.5, 0.5 + 1e-6)
  const TwoPlane p = plane_from_pair(unit(4, 0), unit(4, 1));
  const double a0 = 0.5, a1 = 0.5 + 1e-6;
  const TwoPlane q = plane_from_pair(RealVector{std::cos(a0), 0, std::sin(a0), 0},
                                     RealVector{0, std::cos(a1), 0, std::sin(a1)});
  EXPECT_FALSE(is_isoclinic(p, q).isoclinic);
  const IsoclinyResult loose = is_isoclinic(p, q, 1e-5);
  EXPECT_TRUE(loose.isoclinic);
  EXPECT_NEAR(loose.angle, 0.5 + 5e-7, 1e-12);
}

TEST(IsIsoclinic, HolomorphicPlanesAreMutuallyIsoclinic)
{
  sampling::Rng rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ComplexVector a = sampling::random_complex(rng, n);
    const ComplexVector b = sampling::random_complex(rng, n);
    const IsoclinyResult r = is_isoclinic(holomorphic_plane_of(a), holomorphic_plane_of(b));
    EXPECT_TRUE(r.isoclinic);
    EXPECT_NEAR(r.angle, hermitian_angle(a, b), 1e-9);
  }
}

TEST(IsIsoclinic, JImageIsIsoclinicAtTheFoldedKahlerAngle)
{
  sampling::Rng rng(83);
  for (int trial = 0; trial < 500; ++trial) {
    const TwoPlane p = sampling::random_plane(rng, 2 * (2 + trial % 3));
    const double k = kahler_angle_of_plane(p);
    const IsoclinyResult r = is_isoclinic(p, j_image(p));
    EXPECT_TRUE(r.isoclinic);
    EXPECT_NEAR(r.angle, std::min(k, pi - k), 1e-9);
  }
}

TEST(OrthogonalProjection, VectorAndProjectionSpanAntiholomorphicPlane)
{
  sampling::Rng rng(89);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const TwoPlane hx = holomorphic_plane_of(sampling::random_complex(rng, n));
    const TwoPlane hy = holomorphic_plane_of(sampling::random_complex(rng, n));
    const RealVector X = combine(0.6, hx.span_u(), -0.8, hx.span_v());
    const RealVector PX = orthogonal_projection(X, hy);
    EXPECT_NEAR(kahler_angle_of_plane(plane_from_pair(X, PX)), pi / 2, 1e-9);
    // the projection length is the cosine of the isocliny angle
    EXPECT_NEAR(norm(PX), std::cos(is_isoclinic(hx, hy).angle), 1e-12);
  }
}
