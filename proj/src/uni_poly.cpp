#include "okalab/uni_poly.hpp"

#include <ostream>

#include "okalab/error.hpp"

namespace okalab {

UniPolyQ::UniPolyQ(std::vector<GaussianRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

void UniPolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational UniPolyQ::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPolyQ UniPolyQ::monic() const {
  if (is_zero()) return *this;
  const auto inv = leading().inverse();
  auto out = coeffs_;
  for (auto& c : out) c *= inv;
  return UniPolyQ(std::move(out));
}

UniPolyQ UniPolyQ::operator-() const {
  auto out = coeffs_;
  for (auto& c : out) c = -c;
  return UniPolyQ(std::move(out));
}

UniPolyQ operator+(const UniPolyQ& a, const UniPolyQ& b) {
  std::vector<GaussianRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPolyQ(std::move(out));
}

UniPolyQ operator-(const UniPolyQ& a, const UniPolyQ& b) { return a + (-b); }

UniPolyQ operator*(const UniPolyQ& a, const UniPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPolyQ(std::move(out));
}

std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<GaussianRational> rem = a.coefficients();
  const int db = b.degree();
  const auto lead_inv = b.leading().inverse();
  std::vector<GaussianRational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int d = a.degree(); d >= db; --d) {
    const auto factor = rem[static_cast<std::size_t>(d)] * lead_inv;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(d - db)] = factor;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(d - db + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
  }
  return {UniPolyQ(std::move(quot)), UniPolyQ(std::move(rem))};
}

UniPolyQ gcd(UniPolyQ a, UniPolyQ b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPolyQ::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    if (coeffs_[d].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[d].str() + ")";
    if (d >= 1) out += "*x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPolyQ& p) { return os << p.str(); }

}  // namespace okalab
