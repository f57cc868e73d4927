#ifndef HERMANGLE_SUBSPACES_HPP_
#define HERMANGLE_SUBSPACES_HPP_

// Oriented 2-planes in R^{2n}: construction from spanning pairs, the Kaehler
// angle of a plane, J-images, stationary (principal) angles between two
// planes and the isocliny test.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "angles.hpp"
#include "linalg.hpp"

namespace hermangle
{

/// Oriented 2-plane in an even-dimensional real space, held as an
/// orthonormal pair (u, v). The orientation is the order of the pair.
class TwoPlane
{
  RealVector u_, v_;

  TwoPlane(RealVector u, RealVector v)
  : u_{std::move(u)}
  , v_{std::move(v)}
  {}

  public:
  static constexpr double orthonormality_tolerance = 1e-12;

  /// Wraps a pair that is already orthonormal; throws InvalidArgument if it
  /// is not (within orthonormality_tolerance) or the dimension is odd.
  static TwoPlane from_orthonormal(RealVector u, RealVector v)
  {
    detail::check_same_size(u.size(), v.size());
    if (u.size() % 2 != 0) {
      throw InvalidArgument("2-planes live in an even-dimensional space, got dimension " + std::to_string(u.size()));
    }
    if (std::abs(norm(u) - 1.0) > orthonormality_tolerance || std::abs(norm(v) - 1.0) > orthonormality_tolerance
        || std::abs(real_inner(u, v)) > orthonormality_tolerance) {
      throw InvalidArgument("spanning pair is not orthonormal");
    }
    return TwoPlane(std::move(u), std::move(v));
  }

  const RealVector& span_u() const { return u_; }
  const RealVector& span_v() const { return v_; }
  std::size_t ambient_dim() const { return u_.size(); }

  /// Same plane with the opposite orientation.
  TwoPlane reversed() const { return TwoPlane(v_, u_); }
};

struct PrincipalAngles
{
  double alpha_min; // [0, pi/2]
  double alpha_max; // [alpha_min, pi/2]
};

struct IsoclinyResult
{
  bool isoclinic;
  double angle; // midpoint of the stationary angles; meaningful when isoclinic
};

/// Orientation-preserving Gram-Schmidt of (A, B): u = A/|A|, v the unit
/// component of B orthogonal to A. Throws DegenerateInput when either vector
/// is zero or the sine of their angle is <= tol.
inline TwoPlane plane_from_pair(const RealVector& A, const RealVector& B, double tol = default_tolerance)
{
  detail::check_same_size(A.size(), B.size());
  detail::require_nonzero(A, "first spanning vector");
  detail::require_nonzero(B, "second spanning vector");
  const RealVector u = normalized(A);
  const RealVector b = normalized(B);
  RealVector w = combine(1.0, b, -real_inner(u, b), u);
  if (norm(w) <= tol) throw DegenerateInput("spanning vectors are parallel");
  // second pass restores orthogonality lost to cancellation
  w = combine(1.0, w, -real_inner(u, w), u);
  return TwoPlane::from_orthonormal(u, normalized(w));
}

/// Plane through the real images of a and b, oriented by the pair.
inline TwoPlane plane_from_pair(const ComplexVector& a, const ComplexVector& b, double tol = default_tolerance)
{
  return plane_from_pair(embed(a), embed(b), tol);
}

/// Oriented Kaehler angle of the plane, in [0, pi]: arccos (J u, v).
inline double kahler_angle_of_plane(const TwoPlane& p)
{
  const RealVector ju = apply_j(p.span_u());
  const double c = real_inner(ju, p.span_v());
  const double s = norm(combine(1.0, p.span_v(), -c, ju));
  return std::atan2(s, c);
}

/// The complex line through a as a real 2-plane, spanned by the J-basis (A, JA).
inline TwoPlane holomorphic_plane_of(const ComplexVector& a)
{
  detail::require_nonzero(a, "vector");
  RealVector u = normalized(embed(a));
  RealVector v = apply_j(u);
  return TwoPlane::from_orthonormal(std::move(u), std::move(v));
}

inline TwoPlane j_image(const TwoPlane& p)
{
  return TwoPlane::from_orthonormal(apply_j(p.span_u()), apply_j(p.span_v()));
}

/// Orthogonal projection of X onto the plane q.
inline RealVector orthogonal_projection(const RealVector& X, const TwoPlane& q)
{
  return combine(real_inner(X, q.span_u()), q.span_u(), real_inner(X, q.span_v()), q.span_v());
}

/// Stationary angles between two planes, sorted ascending.
///
/// The cross-Gram matrix M_ij = (p_i, q_j) of the orthonormal bases has the
/// cosines of the stationary angles as singular values. The left singular
/// vectors (eigenvectors of M M^T) give the principal directions x in p; each
/// angle is then atan2(|x - P_q x|, |P_q x|), which stays accurate for angles
/// near zero where the singular value alone would not.
inline PrincipalAngles principal_angles(const TwoPlane& p, const TwoPlane& q)
{
  detail::check_same_size(p.ambient_dim(), q.ambient_dim());
  const double m00 = real_inner(p.span_u(), q.span_u());
  const double m01 = real_inner(p.span_u(), q.span_v());
  const double m10 = real_inner(p.span_v(), q.span_u());
  const double m11 = real_inner(p.span_v(), q.span_v());
  const double s00 = m00 * m00 + m01 * m01;
  const double s11 = m10 * m10 + m11 * m11;
  const double s01 = m00 * m10 + m01 * m11;
  const double theta = 0.5 * std::atan2(2.0 * s01, s00 - s11);
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  auto angle_of = [&](double x_u, double x_v) {
    const RealVector x = combine(x_u, p.span_u(), x_v, p.span_v());
    const RealVector proj = orthogonal_projection(x, q);
    return std::atan2(norm(combine(1.0, x, -1.0, proj)), norm(proj));
  };
  double a0 = angle_of(c, s);
  double a1 = angle_of(-s, c);
  if (a0 > a1) std::swap(a0, a1);
  return {std::clamp(a0, 0.0, std::numbers::pi / 2), std::clamp(a1, 0.0, std::numbers::pi / 2)};
}

/// Planes are isoclinic when their stationary angles differ by at most tol.
inline IsoclinyResult is_isoclinic(const TwoPlane& p, const TwoPlane& q, double tol = default_tolerance)
{
  const PrincipalAngles pa = principal_angles(p, q);
  return {pa.alpha_max - pa.alpha_min <= tol, 0.5 * (pa.alpha_min + pa.alpha_max)};
}

/// Brute-force stationary angles: scans `grid` directions X(t) = cos t u + sin t v,
/// t = k pi / grid, and takes the extremes of the angle between X(t) and its
/// projection onto q (pi/2 when the projection vanishes).
inline PrincipalAngles stationary_angles_oracle(const TwoPlane& p, const TwoPlane& q, int grid)
{
  detail::check_same_size(p.ambient_dim(), q.ambient_dim());
  if (grid < 2) throw InvalidArgument("oracle grid needs at least 2 points");
  constexpr double vanishing_projection = 1e-14;
  double lo = std::numbers::pi / 2;
  double hi = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = std::numbers::pi * k / grid;
    const RealVector x = combine(std::cos(t), p.span_u(), std::sin(t), p.span_v());
    const RealVector proj = orthogonal_projection(x, q);
    const double pn = norm(proj);
    double alpha = std::numbers::pi / 2;
    if (pn > vanishing_projection) {
      alpha = std::acos(std::clamp(real_inner(x, proj) / (norm(x) * pn), -1.0, 1.0));
    }
    lo = std::min(lo, alpha);
    hi = std::max(hi, alpha);
  }
  return {lo, hi};
}

} // namespace hermangle

#endif
