#include "okalab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "okalab/covering.hpp"

namespace okalab {

namespace {

constexpr Complex two_pi_i{0.0, 2.0 * std::numbers::pi};

Complex random_complex(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  const double re = u(rng);
  return {re, u(rng)};
}

Eigen::VectorXcd random_vector(std::mt19937_64& rng, int n, double radius) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = random_complex(rng, radius);
  return v;
}

int random_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

void VerificationRecord::add(double error) {
  ++checked;
  if (error <= tolerance) ++passed;
  if (std::isnan(error))
    max_error = error;
  else if (!std::isnan(max_error))
    max_error = std::max(max_error, error);
}

VerificationRecord aggregate(std::string name, std::span<const VerificationRecord> records) {
  VerificationRecord out{std::move(name)};
  for (const auto& r : records) {
    out.checked += r.checked;
    out.passed += r.passed;
    out.max_error = std::max(out.max_error, r.max_error);
    out.tolerance = std::max(out.tolerance, r.tolerance);
  }
  return out;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("OKALAB_SEED")) {
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0') return v;
  }
  return fallback;
}

PolyMap random_cubic(std::mt19937_64& rng, int num_vars) {
  std::vector<Polynomial::Term> terms;
  Eigen::VectorXi e = Eigen::VectorXi::Zero(num_vars);
  // Enumerate exponent vectors of total degree <= 3 in odometer order.
  while (true) {
    if (e.sum() <= 3) terms.push_back({e, random_complex(rng, 1.0)});
    int i = 0;
    while (i < num_vars && ++e(i) > 3) e(i++) = 0;
    if (i == num_vars) break;
  }
  // Force total degree 3 with a nonzero x_0^3 coefficient.
  Eigen::VectorXi top = Eigen::VectorXi::Zero(num_vars);
  top(0) = 3;
  terms.push_back({top, Complex(0.5, 0.25)});
  return PolyMap(Polynomial(num_vars, std::move(terms)));
}

std::vector<VerificationRecord> covering_suite(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const double tol = tolerance::identity;
  VerificationRecord residence{"covering_residence", 0, 0, 0.0, tol};
  VerificationRecord pi_compat{"pi_respects_equivalence", 0, 0, 0.0, tol};
  VerificationRecord base_point{"spray_base_point", 0, 0, 0.0, tol};
  VerificationRecord transition{"transition_consistency", 0, 0, 0.0, tol};
  VerificationRecord well_defined{"spray_well_defined", 0, 0, 0.0, tol};
  VerificationRecord concrete{"concrete_model", 0, 0, 0.0, tol};

  for (int sample = 0; sample < samples; ++sample) {
    const int n = random_int(rng, 1, 3);
    const PolyMap g = random_cubic(rng, n);
    // Keep |g(x)| away from 0 so that 2 pi i k / g(x) stays representable
    // without dominating the rounding budget.
    Eigen::VectorXcd x;
    Complex gx;
    do {
      x = random_vector(rng, n, 1.0);
      gx = g(x);
    } while (std::abs(gx) < 0.05);
    const Complex y = random_complex(rng, 2.0 / std::max(1.0, std::abs(gx)));
    const long k = random_int(rng, -5, 5);
    const CoveredPoint p{x, y, k};
    const Eigen::VectorXcd s = random_vector(rng, n, 0.5);
    const Complex t = random_complex(rng, 1.0);

    {
      const GraphPoint q = pi_cover(g, p);
      const Complex e = std::exp(gx * y);
      residence.add(std::abs((1.0 - gx * q.y) - e) / (1.0 + std::abs(e)));
    }

    long k2 = random_int(rng, -5, 4);
    if (k2 >= k) ++k2;
    const CoveredPoint p2{x, y - static_cast<double>(k - k2) * two_pi_i / gx, k2};
    {
      const GraphPoint q1 = pi_cover(g, p);
      const GraphPoint q2 = pi_cover(g, p2);
      const double err = equivalent(g, p, p2) ? std::abs(q1.y - q2.y) / (1.0 + std::abs(q1.y))
                                              : std::numeric_limits<double>::infinity();
      pi_compat.add(err);
    }

    {
      const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(n);
      base_point.add(equivalence_residual(g, tilde_sigma0(g, p, zero, 0.0), p));
      base_point.add(equivalence_residual(g, tilde_sigma0(g, p2, zero, 0.0), p2));
    }

    {
      const CoveredPoint p0{x, y, 0};
      const CoveredPoint via_u1 = spray_u1(g, p0, s, t);
      const auto [s2, t2] = transition_12(g, x, s, t);
      const CoveredPoint via_u2 = spray_u2(p0, s2, t2);
      const double scale = 1.0 + std::abs(via_u2.y) + via_u2.x.cwiseAbs().maxCoeff();
      const double err = via_u1.k != via_u2.k ? std::numeric_limits<double>::infinity()
                                              : (std::abs(via_u1.y - via_u2.y) +
                                                 (via_u1.x - via_u2.x).cwiseAbs().maxCoeff()) / scale;
      transition.add(err);
    }

    {
      const CoveredPoint r1 = spray_u1(g, p, s, t);
      const CoveredPoint r2 = spray_u1(g, p2, s, t);
      well_defined.add(equivalence_residual(g, r1, r2));
    }

    {
      const ConcretePoint c = embed_concrete(g, p);
      const Complex e = std::exp(c.z);
      concrete.add(std::abs((1.0 - gx * c.y) - e) / (1.0 + std::abs(e)));
    }
  }
  return {residence, pi_compat, base_point, transition, well_defined, concrete};
}

std::vector<VerificationRecord> fibre_suite(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  VerificationRecord identity{"fibre_identity", 0, 0, 0.0, tolerance::identity};
  VerificationRecord base_point{"fibre_base_point", 0, 0, 0.0, tolerance::identity};
  VerificationRecord derivative{"fibre_t_derivative", 0, 0, 0.0, tolerance::limit};
  constexpr double step = 1e-5;

  for (int sample = 0; sample < samples; ++sample) {
    const int n = random_int(rng, 1, 3);
    const PolyMap g = random_cubic(rng, n);
    Eigen::VectorXcd x;
    Complex y, gx;
    do {
      x = random_vector(rng, n, 1.0);
      y = random_complex(rng, 2.0);
      gx = g(x);
    } while (std::abs(1.0 - gx * y) < 1e-3);
    const Complex t = random_complex(rng, 1.0);

    const GraphPoint image = fibre_spray(g, x, y, t);
    const Complex e = std::exp(t * gx);
    const Complex lhs = 1.0 - gx * image.y;
    const Complex rhs = e * (1.0 - gx * y);
    identity.add(std::abs(lhs - rhs) / (1.0 + std::abs(e) * (1.0 + std::abs(gx * y))));

    const GraphPoint at_zero = fibre_spray(g, x, y, 0.0);
    base_point.add(std::abs(at_zero.y - y) / (1.0 + std::abs(y)) + (at_zero.x - x).cwiseAbs().maxCoeff());

    const Complex forward = fibre_spray(g, x, y, step).y;
    const Complex backward = fibre_spray(g, x, y, -step).y;
    const Complex numeric = (forward - backward) / (2.0 * step);
    const Complex exact = gx * y - 1.0;
    derivative.add(std::abs(numeric - exact) / std::abs(exact));
  }
  return {identity, base_point, derivative};
}

}  // namespace okalab
