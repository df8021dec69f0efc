#include "okalab/complex_poly.hpp"

#include <algorithm>

#include "okalab/error.hpp"

namespace okalab {

namespace {

bool exponent_less(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_vars(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different numbers of variables");
}

}  // namespace

Polynomial::Polynomial(int num_vars, std::vector<Term> terms) : num_vars_(num_vars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.exponents.size() != num_vars_ || (t.exponents.array() < 0).any())
      throw Error(ErrorCode::DimensionMismatch, "bad exponent vector in polynomial term");
  compact();
}

Polynomial Polynomial::univariate(const std::vector<Complex>& ascending) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < ascending.size(); ++d)
    terms.push_back({Eigen::VectorXi::Constant(1, static_cast<int>(d)), ascending[d]});
  return Polynomial(1, std::move(terms));
}

Polynomial Polynomial::coordinate(int num_vars, int i) {
  Eigen::VectorXi e = Eigen::VectorXi::Zero(num_vars);
  e(i) = 1;
  return Polynomial(num_vars, {{e, Complex(1)}});
}

Polynomial Polynomial::constant(int num_vars, Complex c) {
  return Polynomial(num_vars, {{Eigen::VectorXi::Zero(num_vars), c}});
}

void Polynomial::compact() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return exponent_less(a.exponents, b.exponents); });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents)
      merged.back().coefficient += t.coefficient;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coefficient == Complex(0); }),
               merged.end());
  terms_ = std::move(merged);
}

Eigen::VectorXi Polynomial::degrees() const {
  Eigen::VectorXi deg = Eigen::VectorXi::Zero(num_vars_);
  for (const auto& t : terms_) deg = deg.cwiseMax(t.exponents);
  return deg;
}

int Polynomial::total_degree() const {
  int deg = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) deg = std::max(deg, t.exponents.sum());
  return deg;
}

Complex Polynomial::operator()(const Eigen::VectorXcd& x) const {
  if (x.size() != num_vars_) throw Error(ErrorCode::DimensionMismatch, "evaluation point has the wrong length");
  Complex acc(0);
  for (const auto& t : terms_) {
    Complex monomial = t.coefficient;
    for (int i = 0; i < num_vars_; ++i)
      for (int p = 0; p < t.exponents(i); ++p) monomial *= x(i);
    acc += monomial;
  }
  return acc;
}

Complex Polynomial::difference(const Eigen::VectorXcd& x, const Eigen::VectorXcd& delta) const {
  if (x.size() != num_vars_ || delta.size() != num_vars_)
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has the wrong length");
  // prod u - prod v = sum_f (prod_{<f} u) (u_f - v_f) (prod_{>f} v), with u_f - v_f = delta exactly.
  Complex acc(0);
  std::vector<int> vars;
  std::vector<Complex> suffix;
  for (const auto& t : terms_) {
    vars.clear();
    for (int i = 0; i < num_vars_; ++i)
      for (int p = 0; p < t.exponents(i); ++p) vars.push_back(i);
    suffix.assign(vars.size() + 1, Complex(1));
    for (std::size_t f = vars.size(); f-- > 0;) suffix[f] = suffix[f + 1] * x(vars[f]);
    Complex prefix(1), sum(0);
    for (std::size_t f = 0; f < vars.size(); ++f) {
      sum += prefix * delta(vars[f]) * suffix[f + 1];
      prefix *= x(vars[f]) + delta(vars[f]);
    }
    acc += t.coefficient * sum;
  }
  return acc;
}

Polynomial Polynomial::derivative(int i) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents(i) == 0) continue;
    Term d{t.exponents, t.coefficient * static_cast<double>(t.exponents(i))};
    d.exponents(i) -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(num_vars_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_vars(a, b);
  auto terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial(a.num_vars_, std::move(terms));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_vars(a, b);
  auto terms = a.terms_;
  for (auto t : b.terms_) {
    t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
  }
  return Polynomial(a.num_vars_, std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_vars(a, b);
  std::vector<Polynomial::Term> terms;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.exponents + t.exponents, s.coefficient * t.coefficient});
  return Polynomial(a.num_vars_, std::move(terms));
}

PolyMap::PolyMap(Polynomial value) : value_(std::move(value)) {
  for (int i = 0; i < value_.num_vars(); ++i) gradient_.push_back(value_.derivative(i));
}

Complex PolyMap::differential(const Eigen::VectorXcd& x, const Eigen::VectorXcd& s) const {
  if (s.size() != num_vars()) throw Error(ErrorCode::DimensionMismatch, "direction has the wrong length");
  Complex acc(0);
  for (int i = 0; i < num_vars(); ++i) acc += gradient_[static_cast<std::size_t>(i)](x) * s(i);
  return acc;
}

}  // namespace okalab
