#pragma once

#include <optional>
#include <vector>

#include "okalab/arrangement.hpp"

namespace okalab {

/// All circuits of the linear matroid of the forms, sorted by size and then
/// lexicographically by index set. Coefficients are normalized so the first
/// one is 1.
std::vector<Circuit> circuits(const Arrangement& arr);

/// classify() with the circuit list attached.
ClassificationReport classify_with_circuits(const Arrangement& arr);

/// Exact check that sum c_j F_j = 0 and that no proper nonempty sub-sum vanishes.
bool is_minimal_relation(const Circuit& circuit, const Arrangement& arr);

/// Hyperplane sum_{j in J} c_j F_j for a subset J of a circuit with
/// 2 <= |J| <= k-2.
struct DiagonalHyperplane {
  LinearForm form;
  std::size_t circuit_index = 0;
  /// Lexicographically least arrangement-index set producing `form`.
  IndexSet subset;
};

/// Distinct diagonal hyperplanes of one circuit, ordered by canonical subset.
/// Empty for circuits of size 3.
std::vector<DiagonalHyperplane> diagonal_hyperplanes(const Circuit& circuit, const Arrangement& arr,
                                                     std::size_t circuit_index = 0);

/// Kernel basis of the stacked circuit forms: the base locus B as a linear
/// subspace of C^{n+1}.
std::vector<VectorQ> base_locus(const Circuit& circuit, const Arrangement& arr);

struct AssociatedSubspace {
  std::vector<VectorQ> base_locus_basis;
  ProjectivePoint extension_point;
  /// base_locus_basis followed by the canonical lift of extension_point.
  std::vector<VectorQ> span_basis;
};

/// The unique associated subspace through p: span(B, p).
/// Throws PointInBaseLocus when p lies in B.
AssociatedSubspace associated_subspace_through(const Circuit& circuit, const Arrangement& arr,
                                               const ProjectivePoint& p);

/// Linear forms cutting out span(basis): a basis of its annihilator.
std::vector<VectorQ> annihilator(const std::vector<VectorQ>& basis, Eigen::Index ambient);

struct ObstructionEntry {
  Circuit circuit;
  std::vector<DiagonalHyperplane> diagonals_through_point;
  std::optional<AssociatedSubspace> associated;
};

/// Per circuit, the finitely many subspaces one of which must contain any
/// entire curve through the point.
struct ObstructionReport {
  ProjectivePoint point;
  std::vector<ObstructionEntry> per_circuit;
};

/// Requires p in the complement (PointOnArrangement otherwise).
ObstructionReport entire_curve_obstructions(const Arrangement& arr, const ProjectivePoint& p);

enum class SubspaceKind { Diagonal, Associated };

/// Linear conditions on tangent vectors at p, written in the affine chart
/// where p's first nonzero coordinate is 1. Each row has n entries, one per
/// remaining coordinate in increasing order.
struct TangentConditions {
  std::size_t circuit_index = 0;
  SubspaceKind kind = SubspaceKind::Associated;
  Eigen::Index chart = 0;
  std::vector<VectorQ> rows;
};

std::vector<TangentConditions> tangent_direction_subspaces(const Arrangement& arr, const ProjectivePoint& p);

/// True iff every condition vanishes on every sample (exact).
bool verify_curve_in_subspace(const std::vector<VectorQ>& lift_samples,
                              const std::vector<LinearForm>& subspace_conditions);

}  // namespace okalab
