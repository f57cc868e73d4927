#ifndef HERMANGLE_SELFTEST_HPP_
#define HERMANGLE_SELFTEST_HPP_

// Randomized self-check of the angle identities and the 2-plane theorems.
// Deterministic for a fixed seed; each check reports the largest residual
// seen and whether it stayed within its tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "angles.hpp"
#include "subspaces.hpp"

namespace hermangle
{

namespace sampling
{

using Rng = std::mt19937_64;

inline ComplexVector random_complex(Rng& rng, std::size_t n)
{
  std::normal_distribution<double> gauss;
  std::vector<ComplexScalar> entries(n);
  for (ComplexScalar& z : entries) z = {gauss(rng), gauss(rng)};
  return ComplexVector(std::move(entries));
}

inline ComplexVector random_unit_complex(Rng& rng, std::size_t n) { return normalized(random_complex(rng, n)); }

inline RealVector random_real(Rng& rng, std::size_t m)
{
  std::normal_distribution<double> gauss;
  std::vector<double> entries(m);
  for (double& x : entries) x = gauss(rng);
  return RealVector(std::move(entries));
}

inline ComplexScalar random_phase(Rng& rng)
{
  std::uniform_real_distribution<double> turn(-std::numbers::pi, std::numbers::pi);
  return std::polar(1.0, turn(rng));
}

/// Random plane in R^dim from a Gaussian spanning pair.
inline TwoPlane random_plane(Rng& rng, std::size_t dim) { return plane_from_pair(random_real(rng, dim), random_real(rng, dim)); }

/// Re-spans p by a random 2x2 matrix with positive determinant and
/// condition number at most 4 (rotation * diag(s1, s2) * rotation, s in [0.5, 2]).
inline TwoPlane respan(Rng& rng, const TwoPlane& p)
{
  std::uniform_real_distribution<double> turn(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> stretch(0.5, 2.0);
  const double t1 = turn(rng), t2 = turn(rng), s1 = stretch(rng), s2 = stretch(rng);
  // M = R(t1) diag(s1, s2) R(t2)
  const double c1 = std::cos(t1), n1 = std::sin(t1), c2 = std::cos(t2), n2 = std::sin(t2);
  const double m00 = c1 * s1 * c2 - n1 * s2 * n2;
  const double m01 = -c1 * s1 * n2 - n1 * s2 * c2;
  const double m10 = n1 * s1 * c2 + c1 * s2 * n2;
  const double m11 = -n1 * s1 * n2 + c1 * s2 * c2;
  const RealVector A = combine(m00, p.span_u(), m10, p.span_v());
  const RealVector B = combine(m01, p.span_u(), m11, p.span_v());
  return plane_from_pair(A, B);
}

} // namespace sampling

struct SelftestCheck
{
  std::string name;
  double tolerance;
  double max_residual = 0.0;
  long evaluated = 0;

  void record(double residual)
  {
    ++evaluated;
    if (!(residual <= max_residual)) max_residual = residual; // NaN sticks
  }
  bool passed() const { return max_residual <= tolerance; }
};

struct SelftestSummary
{
  long samples;
  std::uint64_t seed;
  std::vector<SelftestCheck> checks;

  bool passed() const
  {
    for (const SelftestCheck& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

/// Runs every check on `samples` random draws (the grid-scan oracle
/// comparison uses at most 100 of them).
inline SelftestSummary run_selftest(long samples, std::uint64_t seed)
{
  using namespace sampling;
  constexpr double pi = std::numbers::pi;
  constexpr int oracle_grid = 10000;
  constexpr long oracle_samples = 100;

  SelftestCheck eq7{"eq7", 1e-10}, eq8{"eq8", 1e-10}, eq9a{"eq9a", 1e-8}, eq9b{"eq9b", 1e-8}, eq9c{"eq9c", 1e-8};
  SelftestCheck cauchy{"cauchy_bound", 1e-12};
  SelftestCheck scale{"scale_invariance", 1e-10};
  SelftestCheck phase{"hermitian_phase_invariance", 1e-10};
  SelftestCheck flip{"kahler_orientation_flip", 1e-10};
  SelftestCheck intrinsic{"plane_kahler_intrinsic", 1e-10};
  SelftestCheck holo{"holomorphic_isocliny", 1e-9};
  SelftestCheck jimage{"j_image_isocliny", 1e-9};
  SelftestCheck antiholo{"antiholomorphic_projection_plane", 1e-9};
  SelftestCheck oracle{"oracle_agreement", 2e-3};

  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> complex_dim(1, 8);
  std::uniform_int_distribution<std::size_t> plane_dim(2, 4);
  std::uniform_real_distribution<double> positive(0.1, 10.0);

  for (long s = 0; s < samples; ++s) {
    // Identities on a random unit pair.
    const std::size_t n = complex_dim(rng);
    const ComplexVector a = random_unit_complex(rng, n);
    const ComplexVector b = random_unit_complex(rng, n);
    const AngleReport r = angle_report(a, b);
    if (r.residuals.eq7) eq7.record(*r.residuals.eq7);
    if (r.residuals.eq8) eq8.record(*r.residuals.eq8);
    if (r.residuals.eq9a) eq9a.record(*r.residuals.eq9a);
    if (r.residuals.eq9b) eq9b.record(*r.residuals.eq9b);
    if (r.residuals.eq9c) eq9c.record(*r.residuals.eq9c);
    cauchy.record(std::max(0.0, r.rho - 1.0));

    const AngleReport rs = angle_report(scaled(a, positive(rng)), scaled(b, positive(rng)));
    double scale_diff = std::max({std::abs(rs.euclidean - r.euclidean), std::abs(rs.hermitian - r.hermitian),
                                  std::abs(rs.complex_cosine - r.complex_cosine)});
    if (r.pseudo && rs.pseudo) {
      // the branch cut at pi may flip sign under rounding
      scale_diff = std::max(scale_diff, std::abs(std::remainder(*rs.pseudo - *r.pseudo, 2 * pi)));
    }
    if (r.kahler && rs.kahler) scale_diff = std::max(scale_diff, std::abs(*rs.kahler - *r.kahler));
    scale.record(scale_diff);

    phase.record(std::abs(hermitian_angle(scaled(a, random_phase(rng)), scaled(b, random_phase(rng))) - r.hermitian));
    if (r.kahler) {
      const MaybeAngle back = kahler_angle(b, a);
      if (back) flip.record(std::abs(*back - (pi - *r.kahler)));
    }

    // Plane theorems in R^4..R^8.
    const std::size_t m = plane_dim(rng);
    const TwoPlane p = random_plane(rng, 2 * m);
    const double theta_k = kahler_angle_of_plane(p);
    intrinsic.record(std::abs(kahler_angle_of_plane(respan(rng, p)) - theta_k));
    intrinsic.record(std::abs(kahler_angle_of_plane(p.reversed()) - (pi - theta_k)));

    const IsoclinyResult jiso = is_isoclinic(p, j_image(p));
    jimage.record(jiso.isoclinic ? std::abs(jiso.angle - std::min(theta_k, pi - theta_k)) : pi);

    const ComplexVector x = random_complex(rng, m);
    const ComplexVector y = random_complex(rng, m);
    const TwoPlane hx = holomorphic_plane_of(x);
    const TwoPlane hy = holomorphic_plane_of(y);
    const IsoclinyResult hiso = is_isoclinic(hx, hy);
    holo.record(hiso.isoclinic ? std::abs(hiso.angle - hermitian_angle(x, y)) : pi);

    // A vector of one holomorphic plane and its projection onto another.
    std::uniform_real_distribution<double> turn(0.0, pi);
    const double t = turn(rng);
    const RealVector X = combine(std::cos(t), hx.span_u(), std::sin(t), hx.span_v());
    const RealVector PX = orthogonal_projection(X, hy);
    if (norm(PX) > 1e-6 && std::sin(real_angle(X, PX)) > 1e-6) {
      antiholo.record(std::abs(kahler_angle_of_plane(plane_from_pair(X, PX)) - pi / 2));
    }

    if (s < oracle_samples) {
      const TwoPlane q = random_plane(rng, 2 * m);
      const PrincipalAngles spectral = principal_angles(p, q);
      const PrincipalAngles scan = stationary_angles_oracle(p, q, oracle_grid);
      oracle.record(std::max(std::abs(spectral.alpha_min - scan.alpha_min), std::abs(spectral.alpha_max - scan.alpha_max)));
    }
  }

  return {samples, seed, {eq7, eq8, eq9a, eq9b, eq9c, cauchy, scale, phase, flip, intrinsic, holo, jimage, antiholo, oracle}};
}

} // namespace hermangle

#endif
