#ifndef HERMANGLE_ANGLES_HPP_
#define HERMANGLE_ANGLES_HPP_

// The five angle notions between two vectors of C^n (Euclidean, complex,
// Hermitian, pseudo- and Kaehler angle), the Hermitian projection, the
// residuals of the identities relating them, and 2-plane classification.
//
// Every function normalizes its inputs first. Angles are recovered with
// atan2 from a stably computed (sine, cosine) pair, so values near 0 and pi
// keep full relative accuracy; the cosine side is always the quotient the
// textbook arccos formula would use.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "linalg.hpp"

namespace hermangle
{

inline constexpr double default_tolerance = 1e-9;

/// Tangent/cotangent magnitudes above this are treated as infinite when
/// evaluating the pseudo-angle identities. Near a pole tan(x) carries an
/// absolute rounding error of about eps * tan(x)^2, so past this limit a
/// residual measures rounding rather than geometry.
inline constexpr double trig_finiteness_limit = 1e3;

enum class Undefined
{
  rho_zero,         // phase of a vanishing Hermitian product
  degenerate_plane, // real images are parallel, no 2-plane
};

inline const char* to_string(Undefined reason)
{
  switch (reason) {
    case Undefined::rho_zero: return "rho_zero";
    case Undefined::degenerate_plane: return "degenerate_plane";
  }
  return "unknown";
}

/// An angle that may be mathematically undefined. Never holds NaN.
class MaybeAngle
{
  std::optional<double> value_;
  Undefined reason_ = Undefined::rho_zero;

  MaybeAngle() = default;

  public:
  static MaybeAngle of(double radians)
  {
    MaybeAngle m;
    m.value_ = radians;
    return m;
  }
  static MaybeAngle undefined(Undefined why)
  {
    MaybeAngle m;
    m.reason_ = why;
    return m;
  }

  bool defined() const { return value_.has_value(); }
  explicit operator bool() const { return defined(); }

  /// Throws std::bad_optional_access when undefined.
  double value() const { return value_.value(); }
  double operator*() const { return value(); }

  /// Only meaningful when !defined().
  Undefined reason() const { return reason_; }
};

/// Residuals of the identities between the angles, computed on normalized
/// inputs. An identity that cannot be evaluated (an angle is undefined or a
/// tangent/cotangent is infinite) is left empty rather than zero.
struct Residuals
{
  std::optional<double> eq7;  // |cos Tc - cos T - i cos TK sin T|
  std::optional<double> eq8;  // |sin TH - sin TK sin T|
  std::optional<double> eq9a; // |cos T - cos TH cos phi|
  std::optional<double> eq9b; // |sin phi - cot TK tan TH|
  std::optional<double> eq9c; // |tan phi - cos TK tan T|
};

struct AngleReport
{
  double euclidean;             // [0, pi]
  ComplexScalar complex_cosine; // modulus <= 1
  double hermitian;             // [0, pi/2]
  MaybeAngle pseudo;            // (-pi, pi]
  double rho;                   // [0, 1]
  MaybeAngle kahler;            // [0, pi]
  Residuals residuals;
};

enum class PlaneTag
{
  holomorphic,
  antiholomorphic,
  slant,
};

inline const char* to_string(PlaneTag tag)
{
  switch (tag) {
    case PlaneTag::holomorphic: return "HOLOMORPHIC";
    case PlaneTag::antiholomorphic: return "ANTIHOLOMORPHIC";
    case PlaneTag::slant: return "SLANT";
  }
  return "UNKNOWN";
}

struct PlaneClass
{
  PlaneTag tag;
  double kahler_angle; // oriented, [0, pi]
};

namespace detail
{

inline void require_nonzero(const RealVector& A, const char* which)
{
  if (norm(A) == 0.0) throw DegenerateInput(std::string(which) + " is the zero vector");
}

inline void require_nonzero(const ComplexVector& a, const char* which)
{
  if (norm(a) == 0.0) throw DegenerateInput(std::string(which) + " is the zero vector");
}

/// Cosine, sine and angle in [0, pi] between two unit real vectors. The sine
/// is the length of the component of B orthogonal to A.
struct RealPairGeometry
{
  double cosine;
  double sine;
  double angle;
};

inline RealPairGeometry unit_pair_geometry(const RealVector& A, const RealVector& B)
{
  const double c = real_inner(A, B);
  const double s = norm(combine(1.0, B, -c, A));
  return {c, s, std::atan2(s, c)};
}

/// Everything the angle functions need, computed once from normalized inputs.
struct PairGeometry
{
  RealVector A, B, JA;
  RealPairGeometry euclid;
  ComplexScalar hermitian; // (a,b)_C of the unit vectors
  double rho;
  double hermitian_sine; // |b - (a,b)_C a|
  double jab;            // (JA, B)_R = cos TK sin T
};

inline PairGeometry pair_geometry(const ComplexVector& a, const ComplexVector& b)
{
  check_same_size(a.size(), b.size());
  require_nonzero(a, "first vector");
  require_nonzero(b, "second vector");
  const ComplexVector ua = normalized(a);
  const ComplexVector ub = normalized(b);
  RealVector A = embed(ua);
  RealVector B = embed(ub);
  RealVector JA = apply_j(A);
  const RealPairGeometry euclid = unit_pair_geometry(A, B);
  const ComplexScalar h = hermitian_inner(ua, ub);
  const double hs = norm(combine(ComplexScalar{1.0}, ub, -h, ua));
  const double jab = real_inner(JA, B);
  return {std::move(A), std::move(B), std::move(JA), euclid, h, std::abs(h), hs, jab};
}

inline double principal_arg(ComplexScalar z)
{
  const double phi = std::atan2(z.imag(), z.real());
  // atan2 returns -pi for a negative real axis carrying a -0.0 imaginary part.
  return phi <= -std::numbers::pi ? std::numbers::pi : phi;
}

inline MaybeAngle pseudo_from(const PairGeometry& g, double tol)
{
  if (g.rho <= tol) return MaybeAngle::undefined(Undefined::rho_zero);
  return MaybeAngle::of(principal_arg(g.hermitian));
}

inline MaybeAngle kahler_from(const PairGeometry& g, double tol)
{
  if (g.euclid.sine <= tol) return MaybeAngle::undefined(Undefined::degenerate_plane);
  // Orthonormal basis (A, V) of the oriented plane; cos TK = (JA, V).
  const RealVector V = scaled(combine(1.0, g.B, -g.euclid.cosine, g.A), 1.0 / g.euclid.sine);
  const double cos_k = g.jab / g.euclid.sine;
  const double sin_k = norm(combine(1.0, V, -cos_k, g.JA));
  return MaybeAngle::of(std::atan2(sin_k, cos_k));
}

inline double hermitian_from(const PairGeometry& g) { return std::atan2(g.hermitian_sine, g.rho); }

inline std::optional<double> finite_or_empty(double x)
{
  if (!std::isfinite(x) || std::abs(x) > trig_finiteness_limit) return std::nullopt;
  return x;
}

inline Residuals residuals_from(const AngleReport& r)
{
  Residuals out;
  const double theta = r.euclidean;
  const double theta_h = r.hermitian;

  if (r.pseudo) {
    const double phi = *r.pseudo;
    out.eq9a = std::abs(std::cos(theta) - std::cos(theta_h) * std::cos(phi));
  }
  if (r.kahler) {
    const double theta_k = *r.kahler;
    const ComplexScalar rhs{std::cos(theta), std::cos(theta_k) * std::sin(theta)};
    out.eq7 = std::abs(r.complex_cosine - rhs);
    out.eq8 = std::abs(std::sin(theta_h) - std::sin(theta_k) * std::sin(theta));
  }
  if (r.pseudo && r.kahler) {
    const double phi = *r.pseudo;
    const double theta_k = *r.kahler;
    const auto cot_k = finite_or_empty(std::cos(theta_k) / std::sin(theta_k));
    const auto tan_h = finite_or_empty(std::tan(theta_h));
    if (cot_k && tan_h) out.eq9b = std::abs(std::sin(phi) - *cot_k * *tan_h);

    const auto tan_phi = finite_or_empty(std::tan(phi));
    const auto tan_t = finite_or_empty(std::tan(theta));
    if (tan_phi && tan_t) out.eq9c = std::abs(*tan_phi - std::cos(theta_k) * *tan_t);
  }
  return out;
}

} // namespace detail

/// Angle in [0, pi] between two nonzero real vectors.
inline double real_angle(const RealVector& A, const RealVector& B)
{
  detail::check_same_size(A.size(), B.size());
  detail::require_nonzero(A, "first vector");
  detail::require_nonzero(B, "second vector");
  return detail::unit_pair_geometry(normalized(A), normalized(B)).angle;
}

/// Angle between the real images of a and b, in [0, pi].
inline double euclidean_angle(const ComplexVector& a, const ComplexVector& b)
{
  return detail::pair_geometry(a, b).euclid.angle;
}

/// (a,b)_C / (|a||b|). Its modulus never exceeds 1 by more than rounding.
inline ComplexScalar complex_angle_cosine(const ComplexVector& a, const ComplexVector& b)
{
  return detail::pair_geometry(a, b).hermitian;
}

/// arccos |cos Tc|, in [0, pi/2]. Depends only on the complex lines through a and b.
inline double hermitian_angle(const ComplexVector& a, const ComplexVector& b)
{
  return detail::hermitian_from(detail::pair_geometry(a, b));
}

/// Principal argument of cos Tc in (-pi, pi]; undefined when |cos Tc| <= tol.
inline MaybeAngle pseudo_angle(const ComplexVector& a, const ComplexVector& b, double tol = default_tolerance)
{
  return detail::pseudo_from(detail::pair_geometry(a, b), tol);
}

/// Oriented Kaehler angle of the real 2-plane spanned by (A, B), in [0, pi].
/// cos TK = (JA, B) / (|A||B| sin T); undefined when sin T <= tol.
inline MaybeAngle kahler_angle(const ComplexVector& a, const ComplexVector& b, double tol = default_tolerance)
{
  return detail::kahler_from(detail::pair_geometry(a, b), tol);
}

/// Kaehler angle with orientation disregarded, folded into [0, pi/2].
inline MaybeAngle kahler_angle_unoriented(const ComplexVector& a, const ComplexVector& b,
                                          double tol = default_tolerance)
{
  const MaybeAngle k = kahler_angle(a, b, tol);
  if (!k) return k;
  return MaybeAngle::of(std::min(*k, std::numbers::pi - *k));
}

/// Orthogonal projection of a onto the complex line through b: sigma b with
/// sigma = (b,a)_C / |b|^2.
inline ComplexVector hermitian_projection(const ComplexVector& a, const ComplexVector& b)
{
  detail::check_same_size(a.size(), b.size());
  const double nb = norm(b);
  if (nb == 0.0) throw DegenerateInput("cannot project onto the zero vector");
  const ComplexScalar sigma = hermitian_inner(b, a) / nb / nb;
  return scaled(b, sigma);
}

inline AngleReport angle_report(const ComplexVector& a, const ComplexVector& b, double tol = default_tolerance)
{
  const detail::PairGeometry g = detail::pair_geometry(a, b);
  AngleReport r{
    .euclidean = g.euclid.angle,
    .complex_cosine = g.hermitian,
    .hermitian = detail::hermitian_from(g),
    .pseudo = detail::pseudo_from(g, tol),
    .rho = g.rho,
    .kahler = detail::kahler_from(g, tol),
    .residuals = {},
  };
  r.residuals = detail::residuals_from(r);
  return r;
}

/// Holomorphic when TK is within tol of 0 or pi, antiholomorphic within tol
/// of pi/2, slant otherwise. Throws DegenerateInput for parallel real images.
inline PlaneClass classify_plane(const ComplexVector& a, const ComplexVector& b, double tol = default_tolerance)
{
  const MaybeAngle k = kahler_angle(a, b, tol);
  if (!k) throw DegenerateInput("vectors span no 2-plane (real images are parallel)");
  const double theta_k = *k;
  PlaneTag tag = PlaneTag::slant;
  if (theta_k <= tol || std::numbers::pi - theta_k <= tol) {
    tag = PlaneTag::holomorphic;
  } else if (std::abs(theta_k - std::numbers::pi / 2) <= tol) {
    tag = PlaneTag::antiholomorphic;
  }
  return {tag, theta_k};
}

} // namespace hermangle

#endif
