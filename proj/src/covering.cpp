#include "okalab/covering.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "okalab/error.hpp"

namespace okalab {

namespace {

constexpr Complex two_pi_i{0.0, 2.0 * std::numbers::pi};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_same_dim(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vectors have different lengths");
}

}  // namespace

Complex expm1(Complex z) {
  const double a = z.real();
  const double b = z.imag();
  const double half_sin = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin, std::exp(a) * std::sin(b)};
}

Complex phi_series(Complex x, Complex y) {
  const Complex z = x * y;
  Complex term(1.0), sum(1.0);
  for (int j = 1; j < 200; ++j) {
    term *= z / static_cast<double>(j + 1);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return y * sum;
}

Complex phi_closed(Complex x, Complex y) {
  if (x == Complex(0)) throw Error(ErrorCode::DivisionByZero, "phi_closed at x = 0");
  return expm1(x * y) / x;
}

Complex phi(Complex x, Complex y) {
  const Complex z = x * y;
  if (z.real() > 709.0) throw Error(ErrorCode::RangeError, "e^{xy} overflows double precision");
  const double az = std::abs(z);
  // The series is only used where its terms decay from the start.
  const bool use_series = az < 1e-4 || (std::abs(x) < 1e-8 && az <= 1.0);
  const Complex out = use_series ? phi_series(x, y) : phi_closed(x, y);
  if (!finite(out)) throw Error(ErrorCode::RangeError, "phi is not finite at this point");
  return out;
}

GraphPoint pi_cover(const PolyMap& g, const CoveredPoint& p) {
  return {p.x, -phi(g(p.x), p.y)};
}

double equivalence_residual(const PolyMap& g, const CoveredPoint& p1, const CoveredPoint& p2) {
  constexpr double infinite = std::numeric_limits<double>::infinity();
  if (p1.x.size() != p2.x.size()) return infinite;
  if (p1.x.size() > 0 && (p1.x - p2.x).cwiseAbs().maxCoeff() > tolerance::same_x) return infinite;
  if (p1.k == p2.k) return std::abs(p1.y - p2.y) / (1.0 + std::max(std::abs(p1.y), std::abs(p2.y)));
  const Complex gx = g(p1.x);
  if (std::abs(gx) <= tolerance::zero_g) return infinite;
  const double dk = static_cast<double>(p1.k - p2.k);
  return std::abs(gx * (p1.y - p2.y) - dk * two_pi_i) / (1.0 + std::abs(dk));
}

bool equivalent(const PolyMap& g, const CoveredPoint& p1, const CoveredPoint& p2) {
  return equivalence_residual(g, p1, p2) <= tolerance::identity;
}

CoveredPoint spray_u1(const PolyMap& g, const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t) {
  check_same_dim(p.x, s);
  const Complex gx = g(p.x);
  const double k = static_cast<double>(p.k);
  if (std::abs(gx) > tolerance::zero_g)
    return {p.x + (gx * gx) * s, p.y - k * two_pi_i / gx + t, 0};
  return {p.x, p.y - k * two_pi_i * g.differential(p.x, s) + t, p.k};
}

CoveredPoint spray_u2(const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t) {
  check_same_dim(p.x, s);
  if (p.k != 0) throw Error(ErrorCode::PreconditionViolated, "layer spray needs a layer-0 representative");
  return {p.x + s, p.y + t, 0};
}

std::pair<Eigen::VectorXcd, Complex> transition_12(const PolyMap& g, const Eigen::VectorXcd& x,
                                                   const Eigen::VectorXcd& s, Complex t) {
  const Complex gx = g(x);
  return {(gx * gx) * s, t};
}

CoveredPoint tilde_sigma0(const PolyMap& g, const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t) {
  return p.k == 0 ? spray_u2(p, s, t) : spray_u1(g, p, s, t);
}

CoveredPoint tilde_sigma(const PolyMap& g, const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t, long layer) {
  CoveredPoint shifted{p.x, p.y, p.k - layer};
  CoveredPoint out = tilde_sigma0(g, shifted, s, t);
  out.k += layer;
  return out;
}

ConcretePoint embed_concrete(const PolyMap& g, const CoveredPoint& p) {
  const Complex gx = g(p.x);
  return {p.x, -phi(gx, p.y), gx * p.y + static_cast<double>(p.k) * two_pi_i};
}

GraphPoint shear(const PolyMap& f, const GraphPoint& p) { return {p.x, p.y + f(p.x)}; }

GraphPoint fibre_spray(const PolyMap& g, const Eigen::VectorXcd& x, Complex y, Complex t) {
  const Complex gx = g(x);
  if (std::abs(1.0 - gx * y) <= tolerance::zero_g)
    throw Error(ErrorCode::PreconditionViolated, "point lies on the graph of 1/g");
  const Complex e = std::exp(t * gx);
  if (!finite(e)) throw Error(ErrorCode::RangeError, "e^{t g(x)} overflows double precision");
  return {x, y * e - phi(gx, t)};
}

std::string_view to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::Converged: return "converged";
    case LimitVerdict::Diverged: return "diverged";
    case LimitVerdict::Inconclusive: return "inconclusive";
  }
  return "";
}

LimitCheck localise_limit_check(const PolyMap& g, const Eigen::VectorXcd& x0, const Eigen::VectorXcd& s,
                                const Eigen::VectorXcd& direction, int steps, int exponent) {
  check_same_dim(x0, s);
  check_same_dim(x0, direction);
  if (exponent < 1) throw Error(ErrorCode::PreconditionViolated, "exponent must be positive");
  if (std::abs(g(x0)) > tolerance::zero_g) throw Error(ErrorCode::PreconditionViolated, "g(x0) is not zero");

  LimitCheck out;
  out.target = g.differential(x0, s);
  const Complex g0 = g(x0);
  for (int j = 1; j <= steps; ++j) {
    const Eigen::VectorXcd step = std::ldexp(1.0, -j) * direction;
    const Eigen::VectorXcd xj = x0 + step;
    const Complex gx = g0 + g.polynomial().difference(x0, step);
    if (std::abs(gx) < 1e-300) continue;
    // 1/g(x) - 1/g(x + u) = (g(x + u) - g(x)) / (g(x) g(x + u)).
    const Complex rise = g.polynomial().difference(xj, std::pow(gx, exponent) * s);
    const Complex shifted = gx + rise;
    if (shifted == Complex(0)) continue;
    const Complex estimate = rise / (gx * shifted);
    if (!finite(estimate)) continue;
    out.steps.push_back(j);
    out.estimates.push_back(estimate);
  }
  if (out.estimates.empty()) throw Error(ErrorCode::AllSamplesSkipped, "g vanishes at every sample point");

  const Complex last = out.estimates.back();
  out.final_error = std::abs(last - out.target);
  if (out.final_error <= tolerance::limit)
    out.verdict = LimitVerdict::Converged;
  else if (std::abs(last) > divergence_bound)
    out.verdict = LimitVerdict::Diverged;
  return out;
}

}  // namespace okalab
