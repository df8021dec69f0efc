#include "okalab/relations.hpp"

#include <algorithm>
#include <map>

#include "okalab/error.hpp"

namespace okalab {

namespace {

void check_circuit(const Circuit& circuit, const Arrangement& arr) {
  if (circuit.indices.size() != circuit.coefficients.size() || circuit.indices.empty())
    throw Error(ErrorCode::CircuitMismatch, "circuit indices and coefficients differ in length");
  for (auto j : circuit.indices)
    if (j >= arr.size()) throw Error(ErrorCode::CircuitMismatch, "circuit refers to a form outside the arrangement");
}

VectorQ weighted_sum(const Circuit& circuit, const Arrangement& arr, const IndexSet& positions) {
  VectorQ sum = VectorQ::Constant(arr.dimension() + 1, GaussianRational(0));
  for (auto pos : positions) sum += arr.form(circuit.indices[pos]).coefficients() * circuit.coefficients[pos];
  return sum;
}

}  // namespace

std::vector<Circuit> circuits(const Arrangement& arr) {
  std::vector<Circuit> found;
  // A circuit has at most rank+1 <= n+2 elements.
  const std::size_t max_size = std::min(arr.size(), static_cast<std::size_t>(arr.dimension() + 2));
  for (std::size_t k = 2; k <= max_size; ++k) {
    for_each_subset(arr.size(), k, [&](const IndexSet& subset) {
      for (const auto& c : found)
        if (is_subset_of(c.indices, subset)) return true;
      // Columns are the forms; the kernel holds the relation coefficients.
      MatrixQ columns = arr.rows(subset).transpose();
      auto kernel = kernel_basis(columns);
      if (kernel.empty()) return true;
      // Every proper subset is independent here, so the nullity is exactly 1.
      auto coeffs = normalize_leading(kernel.front());
      found.push_back({subset, {coeffs->begin(), coeffs->end()}});
      return true;
    });
  }
  return found;
}

ClassificationReport classify_with_circuits(const Arrangement& arr) {
  auto report = classify(arr);
  report.circuits = circuits(arr);
  return report;
}

bool is_minimal_relation(const Circuit& circuit, const Arrangement& arr) {
  check_circuit(circuit, arr);
  const std::size_t k = circuit.size();
  for (const auto& c : circuit.coefficients)
    if (c.is_zero()) return false;
  IndexSet all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  if (!is_zero(weighted_sum(circuit, arr, all))) return false;
  for (std::size_t size = 1; size < k; ++size) {
    bool ok = for_each_subset(k, size, [&](const IndexSet& positions) {
      return !is_zero(weighted_sum(circuit, arr, positions));
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<DiagonalHyperplane> diagonal_hyperplanes(const Circuit& circuit, const Arrangement& arr,
                                                     std::size_t circuit_index) {
  check_circuit(circuit, arr);
  const std::size_t k = circuit.size();
  std::vector<DiagonalHyperplane> out;
  if (k < 4) return out;

  for (std::size_t size = 2; size + 2 <= k; ++size) {
    for_each_subset(k, size, [&](const IndexSet& positions) {
      LinearForm form(*normalize_leading(weighted_sum(circuit, arr, positions)));
      IndexSet subset;
      for (auto pos : positions) subset.push_back(circuit.indices[pos]);
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& d) { return d.form == form; });
      if (it == out.end())
        out.push_back({form, circuit_index, subset});
      else if (std::lexicographical_compare(subset.begin(), subset.end(), it->subset.begin(), it->subset.end()))
        it->subset = subset;
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.subset.begin(), a.subset.end(), b.subset.begin(), b.subset.end());
  });
  return out;
}

std::vector<VectorQ> base_locus(const Circuit& circuit, const Arrangement& arr) {
  check_circuit(circuit, arr);
  return kernel_basis(arr.rows(circuit.indices));
}

AssociatedSubspace associated_subspace_through(const Circuit& circuit, const Arrangement& arr,
                                               const ProjectivePoint& p) {
  if (p.size() != arr.dimension() + 1)
    throw Error(ErrorCode::LengthMismatch, "point has the wrong number of homogeneous coordinates");
  auto base = base_locus(circuit, arr);
  std::vector<VectorQ> span = base;
  span.push_back(p.coordinates());

  MatrixQ stacked(static_cast<Eigen::Index>(span.size()), arr.dimension() + 1);
  for (std::size_t r = 0; r < span.size(); ++r) stacked.row(static_cast<Eigen::Index>(r)) = span[r].transpose();
  if (rank(stacked) != stacked.rows())
    throw Error(ErrorCode::PointInBaseLocus, "point lies in the base locus of the circuit");
  return {std::move(base), p, std::move(span)};
}

std::vector<VectorQ> annihilator(const std::vector<VectorQ>& basis, Eigen::Index ambient) {
  if (basis.empty()) {
    std::vector<VectorQ> all;
    for (Eigen::Index i = 0; i < ambient; ++i) {
      VectorQ e = VectorQ::Constant(ambient, GaussianRational(0));
      e(i) = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  MatrixQ stacked(static_cast<Eigen::Index>(basis.size()), ambient);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (basis[r].size() != ambient) throw Error(ErrorCode::DimensionMismatch, "annihilator: basis length mismatch");
    stacked.row(static_cast<Eigen::Index>(r)) = basis[r].transpose();
  }
  return kernel_basis(stacked);
}

ObstructionReport entire_curve_obstructions(const Arrangement& arr, const ProjectivePoint& p) {
  if (!complement_membership(arr, p))
    throw Error(ErrorCode::PointOnArrangement, "point lies on a hyperplane of the arrangement");
  ObstructionReport report{p, {}};
  const auto all = circuits(arr);
  for (std::size_t ci = 0; ci < all.size(); ++ci) {
    ObstructionEntry entry{all[ci], {}, std::nullopt};
    for (auto& d : diagonal_hyperplanes(all[ci], arr, ci))
      if (d.form(p.coordinates()).is_zero()) entry.diagonals_through_point.push_back(std::move(d));
    // p misses every H_j, hence the base locus.
    entry.associated = associated_subspace_through(all[ci], arr, p);
    report.per_circuit.push_back(std::move(entry));
  }
  return report;
}

std::vector<TangentConditions> tangent_direction_subspaces(const Arrangement& arr, const ProjectivePoint& p) {
  const auto report = entire_curve_obstructions(arr, p);
  const Eigen::Index ambient = arr.dimension() + 1;
  const Eigen::Index chart = p.chart();

  auto restrict_to_chart = [&](const VectorQ& form) {
    VectorQ row(ambient - 1);
    for (Eigen::Index i = 0, r = 0; i < ambient; ++i)
      if (i != chart) row(r++) = form(i);
    return *normalize_leading(row);
  };

  std::vector<TangentConditions> out;
  for (std::size_t ci = 0; ci < report.per_circuit.size(); ++ci) {
    const auto& entry = report.per_circuit[ci];
    for (const auto& d : entry.diagonals_through_point)
      out.push_back({ci, SubspaceKind::Diagonal, chart, {restrict_to_chart(d.form.coefficients())}});
    if (entry.associated) {
      TangentConditions tc{ci, SubspaceKind::Associated, chart, {}};
      for (const auto& form : annihilator(entry.associated->span_basis, ambient))
        tc.rows.push_back(restrict_to_chart(form));
      out.push_back(std::move(tc));
    }
  }
  return out;
}

bool verify_curve_in_subspace(const std::vector<VectorQ>& lift_samples,
                              const std::vector<LinearForm>& subspace_conditions) {
  for (const auto& sample : lift_samples)
    for (const auto& condition : subspace_conditions) {
      if (condition.size() != sample.size())
        throw Error(ErrorCode::DimensionMismatch, "sample and condition have different lengths");
      if (!condition(sample).is_zero()) return false;
    }
  return true;
}

}  // namespace okalab
