#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "okalab/complex_poly.hpp"

namespace okalab {

namespace tolerance {
/// Relative tolerance for algebraic identities.
inline constexpr double identity = 1e-9;
/// Tolerance for limits and finite differences.
inline constexpr double limit = 1e-6;
/// Below this |g(x)| counts as zero.
inline constexpr double zero_g = 1e-12;
/// Componentwise agreement of base points.
inline constexpr double same_x = 1e-12;
}  // namespace tolerance

/// e^z - 1 without cancellation near z = 0.
Complex expm1(Complex z);

/// (e^{xy} - 1)/x, extended by y at x = 0. Uses the power series for small
/// |xy| (or tiny x) and the closed form elsewhere. Throws RangeError when
/// e^{xy} overflows.
Complex phi(Complex x, Complex y);
/// y * sum_j (xy)^j / (j+1)!, summed to double precision.
Complex phi_series(Complex x, Complex y);
/// expm1(xy)/x; x must be nonzero.
Complex phi_closed(Complex x, Complex y);

/// Point (x, y) of C^{n+1}; it lies in X when g(x) y != 1.
struct GraphPoint {
  Eigen::VectorXcd x;
  Complex y;
};

/// Representative (x, y, k) of a point [x, y, k] of the covering space Y.
struct CoveredPoint {
  Eigen::VectorXcd x;
  Complex y;
  long k = 0;
};

/// pi[x, y, k] = (x, -phi(g(x), y)).
GraphPoint pi_cover(const PolyMap& g, const CoveredPoint& p);

/// Normalized defect of the relation (x,y,k) ~ (x',y',k'):
/// |g(x)(y - y') - (k - k') 2 pi i| / (1 + |k - k'|) across layers, and
/// |y - y'| / (1 + max |y|) within a layer. Infinite when the x parts differ
/// or when g(x) = 0 and the layers differ.
double equivalence_residual(const PolyMap& g, const CoveredPoint& p1, const CoveredPoint& p2);

/// The relation (x,y,k) ~ (x',y',k'): x = x', g(x) != 0 and
/// g(x)(y - y') = (k - k') 2 pi i. Representatives on the same layer are
/// equivalent only when they coincide.
bool equivalent(const PolyMap& g, const CoveredPoint& p1, const CoveredPoint& p2);

/// Spray in the trivialization over U_1 (points with a representative off
/// layer 0):
///   [x + g(x)^2 s, y - 2 pi i k / g(x) + t, 0]   if g(x) != 0,
///   [x, y - 2 pi i k g'(x)(s) + t, k]             if g(x) == 0.
CoveredPoint spray_u1(const PolyMap& g, const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t);

/// Layer spray sigma_0 over U_2 = Y_0: [x + s, y + t, 0]. Requires k == 0.
CoveredPoint spray_u2(const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t);

/// Transition from the U_1 fibre coordinates to the U_2 ones over a point
/// [x, y, 0] with g(x) != 0: (s, t) -> (g(x)^2 s, t).
std::pair<Eigen::VectorXcd, Complex> transition_12(const PolyMap& g, const Eigen::VectorXcd& x,
                                                   const Eigen::VectorXcd& s, Complex t);

/// The extended spray: spray_u2 on layer-0 representatives, spray_u1 otherwise.
CoveredPoint tilde_sigma0(const PolyMap& g, const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t);

/// The spray attached to layer `layer`, obtained from tilde_sigma0 by
/// relabelling k -> k - layer.
CoveredPoint tilde_sigma(const PolyMap& g, const CoveredPoint& p, const Eigen::VectorXcd& s, Complex t, long layer);

/// Embedding of Y into C^{n+2}: [x,y,k] -> (x, -phi(g(x), y), g(x) y + 2 pi i k).
/// Its image is {1 - g(x) y = e^z}.
struct ConcretePoint {
  Eigen::VectorXcd x;
  Complex y;
  Complex z;
};
ConcretePoint embed_concrete(const PolyMap& g, const CoveredPoint& p);

/// (x, y) -> (x, y + f(x)), the biholomorphism from the complement of the
/// graph of 1/g onto the complement of the graph of f + 1/g.
GraphPoint shear(const PolyMap& f, const GraphPoint& p);

/// Fibre spray (x, y e^{t g(x)} - phi(g(x), t)) on X. Requires g(x) y != 1.
GraphPoint fibre_spray(const PolyMap& g, const Eigen::VectorXcd& x, Complex y, Complex t);

enum class LimitVerdict { Converged, Diverged, Inconclusive };
std::string_view to_string(LimitVerdict v);

struct LimitCheck {
  std::vector<int> steps;          ///< j of each retained sample
  std::vector<Complex> estimates;  ///< 1/g(x_j) - 1/g(x_j + g(x_j)^e s)
  Complex target;                  ///< g'(x0)(s)
  double final_error = 0.0;
  LimitVerdict verdict = LimitVerdict::Inconclusive;
};

/// Magnitude above which a limit estimate is reported as divergent.
inline constexpr double divergence_bound = 1e3;

/// Samples 1/g(x) - 1/g(x + g(x)^exponent s) at x_j = x0 + 2^{-j} d,
/// j = 1..steps. exponent 2 is the convergent doubly twisted case; exponent 1
/// is the single twist, which blows up.
LimitCheck localise_limit_check(const PolyMap& g, const Eigen::VectorXcd& x0, const Eigen::VectorXcd& s,
                                const Eigen::VectorXcd& direction, int steps, int exponent = 2);

}  // namespace okalab
