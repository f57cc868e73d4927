#ifndef HERMANGLE_LINALG_HPP_
#define HERMANGLE_LINALG_HPP_

// Vector types for C^n and its isometric real image R^{2n}, the two inner
// products, and the almost complex structure J.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hermangle
{

using ComplexScalar = std::complex<double>;

/// Raised for malformed arguments: empty or non-finite vectors, odd lengths
/// where an embedding is expected, mismatched dimensions.
class InvalidArgument : public std::invalid_argument
{
  public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument
{
  public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
  : InvalidArgument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
  {}
};

/// Raised when the mathematics is singular for the given input: zero vectors,
/// parallel spanning pairs.
class DegenerateInput : public std::domain_error
{
  public:
  using std::domain_error::domain_error;
};

namespace detail
{

template<typename T>
bool all_finite(const std::vector<T>& entries)
{
  return std::all_of(entries.begin(), entries.end(), [](const T& x) {
    if constexpr (std::is_same_v<T, ComplexScalar>) {
      return std::isfinite(x.real()) && std::isfinite(x.imag());
    } else {
      return std::isfinite(x);
    }
  });
}

template<typename T>
void check_entries(const std::vector<T>& entries, const char* what)
{
  if (entries.empty()) {
    throw InvalidArgument(std::string(what) + " must have at least one entry");
  }
  if (!all_finite(entries)) {
    throw InvalidArgument(std::string(what) + " has non-finite entries");
  }
}

inline void check_same_size(std::size_t lhs, std::size_t rhs)
{
  if (lhs != rhs) throw DimensionMismatch(lhs, rhs);
}

} // namespace detail

/// Element of R^m, m >= 1, with finite entries.
class RealVector
{
  std::vector<double> entries_;

  public:
  explicit RealVector(std::vector<double> entries)
  : entries_{std::move(entries)}
  {
    detail::check_entries(entries_, "real vector");
  }
  RealVector(std::initializer_list<double> entries)
  : RealVector(std::vector<double>(entries))
  {}

  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const { return entries_; }

  friend bool operator==(const RealVector&, const RealVector&) = default;
};

/// Element of C^n, n >= 1, with finite entries.
class ComplexVector
{
  std::vector<ComplexScalar> entries_;

  public:
  explicit ComplexVector(std::vector<ComplexScalar> entries)
  : entries_{std::move(entries)}
  {
    detail::check_entries(entries_, "complex vector");
  }
  ComplexVector(std::initializer_list<ComplexScalar> entries)
  : ComplexVector(std::vector<ComplexScalar>(entries))
  {}

  std::size_t size() const { return entries_.size(); }
  ComplexScalar operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ComplexScalar> entries() const { return entries_; }

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;
};

/// Interleaved layout: A[2k] = Re a[k], A[2k+1] = Im a[k] (zero-based).
inline RealVector embed(const ComplexVector& a)
{
  std::vector<double> out;
  out.reserve(2 * a.size());
  for (const ComplexScalar& z : a.entries()) {
    out.push_back(z.real());
    out.push_back(z.imag());
  }
  return RealVector(std::move(out));
}

inline ComplexVector unembed(const RealVector& A)
{
  if (A.size() % 2 != 0) {
    throw InvalidArgument("cannot unembed a vector of odd length " + std::to_string(A.size()));
  }
  std::vector<ComplexScalar> out;
  out.reserve(A.size() / 2);
  for (std::size_t k = 0; k < A.size(); k += 2) out.emplace_back(A[k], A[k + 1]);
  return ComplexVector(std::move(out));
}

/// (a,b)_C = sum conj(a_k) b_k; conjugate-linear in the first argument.
inline ComplexScalar hermitian_inner(const ComplexVector& a, const ComplexVector& b)
{
  detail::check_same_size(a.size(), b.size());
  ComplexScalar sum{0.0, 0.0};
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::conj(a[k]) * b[k];
  return sum;
}

inline double real_inner(const RealVector& A, const RealVector& B)
{
  detail::check_same_size(A.size(), B.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < A.size(); ++k) sum += A[k] * B[k];
  return sum;
}

namespace detail
{

// Euclidean length with pre-scaling so that huge or tiny entries neither
// overflow nor underflow.
template<typename Range>
double scaled_norm(const Range& xs)
{
  double scale = 0.0;
  for (const auto& x : xs) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& x : xs) {
    const double r = std::abs(x) / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

} // namespace detail

inline double norm(const RealVector& A) { return detail::scaled_norm(A.entries()); }

inline double norm(const ComplexVector& a)
{
  // |a| = |embed(a)|; go through the real parts so both agree bit for bit.
  return norm(embed(a));
}

/// Almost complex structure on R^{2n}: the real image of a -> i a.
/// Component rule (zero-based): out[2k] = -A[2k+1], out[2k+1] = A[2k].
inline RealVector apply_j(const RealVector& A)
{
  if (A.size() % 2 != 0) {
    throw InvalidArgument("almost complex structure needs even length, got " + std::to_string(A.size()));
  }
  std::vector<double> out(A.size());
  for (std::size_t k = 0; k < A.size(); k += 2) {
    out[k] = -A[k + 1];
    out[k + 1] = A[k];
  }
  return RealVector(std::move(out));
}

// Small arithmetic helpers used across the library.

inline RealVector scaled(const RealVector& A, double s)
{
  std::vector<double> out(A.entries().begin(), A.entries().end());
  for (double& x : out) x *= s;
  return RealVector(std::move(out));
}

inline ComplexVector scaled(const ComplexVector& a, ComplexScalar s)
{
  std::vector<ComplexScalar> out(a.entries().begin(), a.entries().end());
  for (ComplexScalar& z : out) z *= s;
  return ComplexVector(std::move(out));
}

/// alpha * A + beta * B
inline RealVector combine(double alpha, const RealVector& A, double beta, const RealVector& B)
{
  detail::check_same_size(A.size(), B.size());
  std::vector<double> out(A.size());
  for (std::size_t k = 0; k < A.size(); ++k) out[k] = alpha * A[k] + beta * B[k];
  return RealVector(std::move(out));
}

inline ComplexVector combine(ComplexScalar alpha, const ComplexVector& a, ComplexScalar beta, const ComplexVector& b)
{
  detail::check_same_size(a.size(), b.size());
  std::vector<ComplexScalar> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = alpha * a[k] + beta * b[k];
  return ComplexVector(std::move(out));
}

/// A / |A|; throws DegenerateInput for the zero vector.
inline RealVector normalized(const RealVector& A)
{
  double scale = 0.0;
  for (double x : A.entries()) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) throw DegenerateInput("zero vector has no direction");
  std::vector<double> out(A.entries().begin(), A.entries().end());
  for (double& x : out) x /= scale;
  const double length = detail::scaled_norm(out);
  for (double& x : out) x /= length;
  return RealVector(std::move(out));
}

inline ComplexVector normalized(const ComplexVector& a) { return unembed(normalized(embed(a))); }

} // namespace hermangle

#endif
