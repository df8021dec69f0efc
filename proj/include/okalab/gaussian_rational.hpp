#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace okalab {

/// Exact element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form (lowest terms,
/// positive denominator), so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}
  GaussianRational(long value) : re_(value) {}
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses "a", "a/b", "a/b+c/d*i", "c/d*i", "i", "-i", "2i" and the like.
  static GaussianRational parse(std::string_view text);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws Error(DivisionByZero) on zero.
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical string: real part, then "+c/d*i" or "-c/d*i" when the
  /// imaginary part is nonzero. Round-trips bit-exactly through parse().
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Total order (real part, then imaginary part). Not a field order; used
  /// only for deterministic sorting.
  friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussianRational operator""_gq(unsigned long long v) {
  return GaussianRational(mpq_class(static_cast<unsigned long>(v)));
}

}  // namespace okalab

namespace Eigen {

template <>
struct NumTraits<okalab::GaussianRational> : GenericNumTraits<okalab::GaussianRational> {
  using Real = okalab::GaussianRational;
  using NonInteger = okalab::GaussianRational;
  using Nested = okalab::GaussianRational;
  using Literal = okalab::GaussianRational;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace okalab {

using VectorQ = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;
using RowVectorQ = Eigen::Matrix<GaussianRational, 1, Eigen::Dynamic>;
using MatrixQ = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;

VectorQ make_vector(std::initializer_list<GaussianRational> entries);
MatrixQ make_matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

/// Exact structural equality; false on shape mismatch.
template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

/// Sum of a(i)*b(i), no conjugation.
template <typename A, typename B>
GaussianRational bilinear_dot(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  GaussianRational acc;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
  return acc;
}

/// Lexicographic comparison of two vectors using lex_less on entries.
bool lex_less(const VectorQ& a, const VectorQ& b);

}  // namespace okalab
