#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "okalab/complex_poly.hpp"
#include "okalab/uni_poly.hpp"

namespace okalab {

/// m = h/k = f + c/k, so m = f + 1/g with g = k/c.
struct PolyDecomposition {
  UniPolyQ f;
  GaussianRational c;
};

/// Polynomial witness of m = h/k = f + 1/g: f with h - k f = c a nonzero
/// constant. Returns nullopt when h mod k is not a nonzero constant; an entire
/// witness may still exist in that case.
///
/// Throws BothZero when h = k = 0 and CommonFactor when gcd(h, k) is not 1.
std::optional<PolyDecomposition> poly_decompose_univariate(const UniPolyQ& h, const UniPolyQ& k);

/// Winding number about 0 of the closed loop through the samples (the last
/// sample connects back to the first). Throws ZeroSample on a zero sample and
/// UnderResolvedLoop when a consecutive ratio r has |r - 1| >= 1 or the
/// accumulated angle is not within 1e-6 of a multiple of 2 pi.
long winding_number(std::span<const Complex> loop);

/// True iff k(x) y != h(x): (x, y) avoids the graph of m = h/k. Points over
/// poles of m always pass. Throws CommonZero when h(x) = k(x) = 0.
bool graph_membership(const PolyMap& h, const PolyMap& k, const Eigen::VectorXcd& x, Complex y);

enum class DecompositionStatus { Witness, Obstructed, Unknown };
std::string_view to_string(DecompositionStatus s);

/// m_nu(x, y) = x / (x y^nu - 1) on C^2, with its zero set of k parametrized
/// by y -> (y^{-nu}, y).
struct MNuPreset {
  int nu;
  PolyMap h;
  PolyMap k;

  explicit MNuPreset(int nu);
  /// Points of Z(k) over y = e^{i theta}, theta = 2 pi j / samples.
  std::vector<Eigen::VectorXcd> loop(int samples) const;
};

struct LoopObstruction {
  long winding = 0;
  DecompositionStatus status = DecompositionStatus::Unknown;
  /// max |k| over the loop points; confirms the loop lies in Z(k).
  double max_k_residual = 0.0;
};

/// Winding of h along a loop in Z(k). A nonzero winding means h has no
/// logarithm on Z(k), so m = h/k has no decomposition f + 1/g. Zero winding
/// proves nothing.
LoopObstruction loop_obstruction(const PolyMap& h, const PolyMap& k, const std::vector<Eigen::VectorXcd>& loop);

}  // namespace okalab
