#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "okalab/exact_linalg.hpp"
#include "okalab/gaussian_rational.hpp"
#include "okalab/subsets.hpp"

namespace okalab {

/// Scales v so its first nonzero entry is 1. Returns nullopt for the zero vector.
std::optional<VectorQ> normalize_leading(const VectorQ& v);

/// Nonzero homogeneous linear form in x_0..x_n.
///
/// Keeps the caller's coefficients, so relation coefficients and pullbacks
/// refer to the forms as written. Hyperplane identity uses the canonical
/// representative whose first nonzero coefficient is 1.
class LinearForm {
 public:
  /// Throws Error(ZeroForm) for the zero vector.
  explicit LinearForm(const VectorQ& coefficients);

  const VectorQ& coefficients() const { return coefficients_; }
  const VectorQ& normalized() const { return normalized_; }
  Eigen::Index size() const { return coefficients_.size(); }

  /// F(v) for a vector of homogeneous coordinates.
  GaussianRational operator()(const VectorQ& v) const;

  /// Same hyperplane.
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return exactly_equal(a.normalized_, b.normalized_);
  }

 private:
  VectorQ coefficients_;
  VectorQ normalized_;
};

/// Point of P^n in canonical homogeneous coordinates (first nonzero = 1).
class ProjectivePoint {
 public:
  /// Throws Error(ZeroForm) when all coordinates vanish.
  explicit ProjectivePoint(const VectorQ& coordinates);

  const VectorQ& coordinates() const { return coordinates_; }
  Eigen::Index size() const { return coordinates_.size(); }
  /// Index of the first nonzero coordinate, which is 1 after normalization.
  Eigen::Index chart() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return exactly_equal(a.coordinates_, b.coordinates_);
  }

 private:
  VectorQ coordinates_;
};

/// N pairwise distinct hyperplanes of P^n.
class Arrangement {
 public:
  /// Validates lengths (LengthMismatch) and distinctness (DuplicateHyperplane).
  Arrangement(int n, std::vector<LinearForm> forms);

  /// Rejects zero rows with ZeroForm.
  static Arrangement from_rows(int n, const std::vector<VectorQ>& rows);

  int dimension() const { return n_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const LinearForm& form(std::size_t j) const { return forms_.at(j); }

  /// N x (n+1) coefficient matrix, one form per row.
  MatrixQ matrix() const;
  /// Coefficient rows of the selected forms, in the given order.
  MatrixQ rows(const IndexSet& indices) const;

 private:
  int n_;
  std::vector<LinearForm> forms_;
};

/// Reads { "n": int, "forms": [[scalar, ...], ...] }.
Arrangement parse_arrangement(std::string_view json_text);

/// Minimal linear relation among the forms at `indices`:
/// sum_j coefficients[j] * F_{indices[j]} = 0, coefficients[0] = 1.
struct Circuit {
  IndexSet indices;
  std::vector<GaussianRational> coefficients;

  std::size_t size() const { return indices.size(); }
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class Verdict { Oka, NotOka };
enum class Reason { GeneralPositionFewForms, GeneralPositionTooMany, NotGeneralPosition };

std::string_view to_string(Verdict v);
std::string_view to_string(Reason r);

/// X = C*^(N-1) x C^(n+1-N) for N coordinate hyperplanes, N >= 1.
struct ProductProfile {
  int punctured_planes = 0;
  int planes = 0;
  friend bool operator==(const ProductProfile&, const ProductProfile&) = default;
};

struct ClassificationReport {
  Verdict verdict = Verdict::NotOka;
  Reason reason = Reason::NotGeneralPosition;
  bool dominable_by_cn = false;
  bool c_connected = false;
  std::optional<MatrixQ> oka_witness;
  std::optional<ProductProfile> product_profile;
  std::optional<IndexSet> failing_subset;
  std::optional<std::vector<Circuit>> circuits;

  friend bool operator==(const ClassificationReport& a, const ClassificationReport& b);
};

struct GeneralPositionResult {
  bool general_position = true;
  /// Smallest dependent subset of size <= n+1, lexicographically least.
  std::optional<IndexSet> failing_subset;
};

GeneralPositionResult is_general_position(const Arrangement& arr);

/// Oka iff general position and N <= n+1; otherwise not dominable by C^n
/// and not C-connected. Circuits are left empty here (see relations.hpp).
ClassificationReport classify(const Arrangement& arr);

/// Invertible M with F_j(M x) = x_j (up to a nonzero scalar). Requires general position and
/// N <= n+1 (PreconditionViolated otherwise).
MatrixQ oka_witness(const Arrangement& arr);

/// Exact check that F_j composed with M is proportional to x_j for every
/// j and that M is invertible.
bool verify_oka_witness(const Arrangement& arr, const MatrixQ& m);

/// True iff no form vanishes at p.
bool complement_membership(const Arrangement& arr, const ProjectivePoint& p);

}  // namespace okalab
