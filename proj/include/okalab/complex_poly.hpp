#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace okalab {

using Complex = std::complex<double>;

/// Sparse multivariate polynomial with complex double coefficients.
class Polynomial {
 public:
  struct Term {
    Eigen::VectorXi exponents;
    Complex coefficient;
  };

  explicit Polynomial(int num_vars = 1) : num_vars_(num_vars) {}
  Polynomial(int num_vars, std::vector<Term> terms);

  /// Univariate polynomial from ascending coefficients c_0 + c_1 x + ...
  static Polynomial univariate(const std::vector<Complex>& ascending);
  /// The coordinate function x_i on C^num_vars.
  static Polynomial coordinate(int num_vars, int i);
  static Polynomial constant(int num_vars, Complex c);

  int num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Maximum exponent of each variable.
  Eigen::VectorXi degrees() const;
  int total_degree() const;

  Complex operator()(const Eigen::VectorXcd& x) const;
  /// p(x + delta) - p(x), summed without cancelling the p(x) terms.
  Complex difference(const Eigen::VectorXcd& x, const Eigen::VectorXcd& delta) const;
  /// Formal partial derivative in variable i.
  Polynomial derivative(int i) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void compact();

  int num_vars_;
  std::vector<Term> terms_;
};

/// A polynomial g together with its formal gradient.
class PolyMap {
 public:
  explicit PolyMap(Polynomial value);

  /// g == 0, the degenerate m = infinity case.
  static PolyMap zero(int num_vars) { return PolyMap(Polynomial(num_vars)); }

  int num_vars() const { return value_.num_vars(); }
  const Polynomial& polynomial() const { return value_; }
  const std::vector<Polynomial>& gradient() const { return gradient_; }
  bool is_identically_zero() const { return value_.terms().empty(); }

  Complex operator()(const Eigen::VectorXcd& x) const { return value_(x); }
  /// g'(x)(s) = sum_i d_i g(x) s_i.
  Complex differential(const Eigen::VectorXcd& x, const Eigen::VectorXcd& s) const;

 private:
  Polynomial value_;
  std::vector<Polynomial> gradient_;
};

}  // namespace okalab
