#include "okalab/decomposition.hpp"

#include <cmath>
#include <numbers>

#include "okalab/error.hpp"

namespace okalab {

std::optional<PolyDecomposition> poly_decompose_univariate(const UniPolyQ& h, const UniPolyQ& k) {
  if (h.is_zero() && k.is_zero()) throw Error(ErrorCode::BothZero, "h and k are both zero");
  if (!gcd(h, k).is_constant()) throw Error(ErrorCode::CommonFactor, "h and k have a common zero");

  if (k.is_zero()) {
    // m = infinity: g = 0 and h is a nonzero constant by coprimality.
    return PolyDecomposition{UniPolyQ(), h.leading()};
  }
  PolyDecomposition out;
  if (k.is_constant()) {
    // m is a polynomial: m = (m - 1) + 1/1.
    out.c = k.leading();
    out.f = divmod(h - k, k).first;
  } else {
    auto [quotient, remainder] = divmod(h, k);
    if (remainder.is_zero() || !remainder.is_constant()) return std::nullopt;
    out.f = std::move(quotient);
    out.c = remainder.leading();
  }
  if (h - k * out.f != UniPolyQ::constant(out.c) || out.c.is_zero())
    throw Error(ErrorCode::PreconditionViolated, "decomposition failed exact verification");
  return out;
}

long winding_number(std::span<const Complex> loop) {
  if (loop.empty()) throw Error(ErrorCode::UnderResolvedLoop, "empty loop");
  for (const auto& z : loop)
    if (z == Complex(0)) throw Error(ErrorCode::ZeroSample, "loop passes through zero");

  double total = 0.0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Complex ratio = loop[(i + 1) % loop.size()] / loop[i];
    if (std::abs(ratio - 1.0) >= 1.0)
      throw Error(ErrorCode::UnderResolvedLoop, "loop is under-resolved at sample " + std::to_string(i));
    total += std::arg(ratio);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 1e-6)
    throw Error(ErrorCode::UnderResolvedLoop, "accumulated angle is not a multiple of 2 pi");
  return static_cast<long>(rounded);
}

bool graph_membership(const PolyMap& h, const PolyMap& k, const Eigen::VectorXcd& x, Complex y) {
  const Complex hx = h(x);
  const Complex kx = k(x);
  if (std::abs(hx) + std::abs(kx) <= 1e-12) throw Error(ErrorCode::CommonZero, "h and k vanish together");
  return std::abs(kx * y - hx) > 1e-12 * (1.0 + std::abs(hx));
}

std::string_view to_string(DecompositionStatus s) {
  switch (s) {
    case DecompositionStatus::Witness: return "witness";
    case DecompositionStatus::Obstructed: return "obstructed";
    case DecompositionStatus::Unknown: return "unknown";
  }
  return "";
}

namespace {

PolyMap m_nu_numerator() { return PolyMap(Polynomial::coordinate(2, 0)); }

PolyMap m_nu_denominator(int nu) {
  Eigen::VectorXi exps(2);
  exps << 1, nu;
  return PolyMap(Polynomial(2, {{exps, Complex(1)}, {Eigen::VectorXi::Zero(2), Complex(-1)}}));
}

}  // namespace

MNuPreset::MNuPreset(int nu_) : nu(nu_), h(m_nu_numerator()), k(m_nu_denominator(nu_)) {
  if (nu < 1) throw Error(ErrorCode::PreconditionViolated, "nu must be a positive integer");
}

std::vector<Eigen::VectorXcd> MNuPreset::loop(int samples) const {
  if (samples < 1) throw Error(ErrorCode::UnderResolvedLoop, "need at least one sample");
  std::vector<Eigen::VectorXcd> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / samples;
    const Complex y = std::polar(1.0, theta);
    Eigen::VectorXcd p(2);
    p << std::polar(1.0, -nu * theta), y;
    points.push_back(std::move(p));
  }
  return points;
}

LoopObstruction loop_obstruction(const PolyMap& h, const PolyMap& k, const std::vector<Eigen::VectorXcd>& loop) {
  LoopObstruction out;
  std::vector<Complex> values;
  values.reserve(loop.size());
  for (const auto& p : loop) {
    out.max_k_residual = std::max(out.max_k_residual, std::abs(k(p)));
    values.push_back(h(p));
  }
  if (out.max_k_residual > 1e-9) throw Error(ErrorCode::PreconditionViolated, "loop does not lie in the zero set of k");
  out.winding = winding_number(values);
  out.status = out.winding != 0 ? DecompositionStatus::Obstructed : DecompositionStatus::Unknown;
  return out;
}

}  // namespace okalab
