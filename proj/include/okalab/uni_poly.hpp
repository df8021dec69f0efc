#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "okalab/gaussian_rational.hpp"

namespace okalab {

/// Univariate polynomial over Q(i), ascending coefficients, no trailing zeros.
class UniPolyQ {
 public:
  UniPolyQ() = default;
  explicit UniPolyQ(std::vector<GaussianRational> ascending);
  static UniPolyQ constant(const GaussianRational& c) { return UniPolyQ({c}); }
  /// The monomial x.
  static UniPolyQ x() { return UniPolyQ({0, 1}); }

  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  GaussianRational leading() const { return is_zero() ? GaussianRational(0) : coeffs_.back(); }
  GaussianRational operator()(const GaussianRational& x) const;

  /// Scaled so the leading coefficient is 1 (zero stays zero).
  UniPolyQ monic() const;

  UniPolyQ operator-() const;
  friend UniPolyQ operator+(const UniPolyQ& a, const UniPolyQ& b);
  friend UniPolyQ operator-(const UniPolyQ& a, const UniPolyQ& b);
  friend UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b);
  friend bool operator==(const UniPolyQ&, const UniPolyQ&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const UniPolyQ& p);

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Quotient and remainder with deg(remainder) < deg(divisor).
/// Throws DivisionByZero for a zero divisor.
std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPolyQ gcd(UniPolyQ a, UniPolyQ b);

}  // namespace okalab
