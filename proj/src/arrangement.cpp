#include "okalab/arrangement.hpp"

#include <json.hpp>
#include <string>

#include "okalab/error.hpp"

namespace okalab {

std::optional<VectorQ> normalize_leading(const VectorQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    const GaussianRational inv = v(i).inverse();
    VectorQ out = v * inv;
    return out;
  }
  return std::nullopt;
}

LinearForm::LinearForm(const VectorQ& coefficients) : coefficients_(coefficients) {
  auto normalized = normalize_leading(coefficients);
  if (!normalized) throw Error(ErrorCode::ZeroForm, "linear form is identically zero");
  normalized_ = std::move(*normalized);
}

GaussianRational LinearForm::operator()(const VectorQ& v) const {
  if (v.size() != coefficients_.size())
    throw Error(ErrorCode::LengthMismatch, "point and form have different lengths");
  return bilinear_dot(coefficients_, v);
}

ProjectivePoint::ProjectivePoint(const VectorQ& coordinates) {
  auto normalized = normalize_leading(coordinates);
  if (!normalized) throw Error(ErrorCode::ZeroForm, "projective point has all coordinates zero");
  coordinates_ = std::move(*normalized);
}

Eigen::Index ProjectivePoint::chart() const {
  for (Eigen::Index i = 0; i < coordinates_.size(); ++i)
    if (!coordinates_(i).is_zero()) return i;
  return 0;
}

Arrangement::Arrangement(int n, std::vector<LinearForm> forms) : n_(n), forms_(std::move(forms)) {
  if (n_ < 1) throw Error(ErrorCode::MalformedDocument, "projective dimension must be positive");
  for (std::size_t j = 0; j < forms_.size(); ++j) {
    if (forms_[j].size() != n_ + 1)
      throw Error(ErrorCode::LengthMismatch, "form " + std::to_string(j) + " has " +
                                                 std::to_string(forms_[j].size()) + " coefficients, expected " +
                                                 std::to_string(n_ + 1));
    for (std::size_t i = 0; i < j; ++i)
      if (forms_[i] == forms_[j])
        throw Error(ErrorCode::DuplicateHyperplane,
                    "forms " + std::to_string(i) + " and " + std::to_string(j) + " define the same hyperplane");
  }
}

Arrangement Arrangement::from_rows(int n, const std::vector<VectorQ>& rows) {
  std::vector<LinearForm> forms;
  forms.reserve(rows.size());
  for (const auto& r : rows) forms.emplace_back(r);
  return Arrangement(n, std::move(forms));
}

MatrixQ Arrangement::matrix() const {
  MatrixQ m(static_cast<Eigen::Index>(forms_.size()), n_ + 1);
  for (std::size_t j = 0; j < forms_.size(); ++j)
    m.row(static_cast<Eigen::Index>(j)) = forms_[j].coefficients().transpose();
  return m;
}

MatrixQ Arrangement::rows(const IndexSet& indices) const {
  MatrixQ m(static_cast<Eigen::Index>(indices.size()), n_ + 1);
  for (std::size_t r = 0; r < indices.size(); ++r)
    m.row(static_cast<Eigen::Index>(r)) = form(indices[r]).coefficients().transpose();
  return m;
}

Arrangement parse_arrangement(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() || !doc.contains("forms") ||
      !doc["forms"].is_array())
    throw Error(ErrorCode::MalformedDocument, "expected {\"n\": integer, \"forms\": [[scalar, ...], ...]}");

  const int n = doc["n"].get<int>();
  std::vector<VectorQ> rows;
  for (const auto& row : doc["forms"]) {
    if (!row.is_array()) throw Error(ErrorCode::MalformedDocument, "each form must be an array of scalars");
    VectorQ v(static_cast<Eigen::Index>(row.size()));
    Eigen::Index i = 0;
    for (const auto& entry : row) {
      if (entry.is_string())
        v(i++) = GaussianRational::parse(entry.get<std::string>());
      else if (entry.is_number_integer())
        v(i++) = GaussianRational(entry.get<long>());
      else
        throw Error(ErrorCode::MalformedScalar, "scalar must be a string such as \"1/2+3/4*i\"");
    }
    rows.push_back(std::move(v));
  }
  // Length errors take precedence over zero-form errors so a short zero row
  // reports the more specific problem.
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (rows[j].size() != n + 1)
      throw Error(ErrorCode::LengthMismatch, "form " + std::to_string(j) + " has " +
                                                 std::to_string(rows[j].size()) + " coefficients, expected " +
                                                 std::to_string(n + 1));
  return Arrangement::from_rows(n, rows);
}

std::string_view to_string(Verdict v) { return v == Verdict::Oka ? "Oka" : "NotOka"; }

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::GeneralPositionFewForms: return "GeneralPositionFewForms";
    case Reason::GeneralPositionTooMany: return "GeneralPositionTooMany";
    case Reason::NotGeneralPosition: return "NotGeneralPosition";
  }
  return "";
}

bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
  if (a.oka_witness.has_value() != b.oka_witness.has_value()) return false;
  if (a.oka_witness && !exactly_equal(*a.oka_witness, *b.oka_witness)) return false;
  return a.verdict == b.verdict && a.reason == b.reason && a.dominable_by_cn == b.dominable_by_cn &&
         a.c_connected == b.c_connected && a.product_profile == b.product_profile &&
         a.failing_subset == b.failing_subset && a.circuits == b.circuits;
}

GeneralPositionResult is_general_position(const Arrangement& arr) {
  const std::size_t max_size = std::min(arr.size(), static_cast<std::size_t>(arr.dimension() + 1));
  GeneralPositionResult result;
  for (std::size_t k = 1; k <= max_size && result.general_position; ++k) {
    for_each_subset(arr.size(), k, [&](const IndexSet& subset) {
      if (rank(arr.rows(subset)) < static_cast<Eigen::Index>(k)) {
        result.general_position = false;
        result.failing_subset = subset;
        return false;
      }
      return true;
    });
  }
  return result;
}

ClassificationReport classify(const Arrangement& arr) {
  ClassificationReport report;
  const auto gp = is_general_position(arr);
  const auto big_n = static_cast<int>(arr.size());
  if (!gp.general_position) {
    report.reason = Reason::NotGeneralPosition;
    report.failing_subset = gp.failing_subset;
  } else if (big_n > arr.dimension() + 1) {
    report.reason = Reason::GeneralPositionTooMany;
  } else {
    report.verdict = Verdict::Oka;
    report.reason = Reason::GeneralPositionFewForms;
    report.dominable_by_cn = true;
    report.c_connected = true;
    report.oka_witness = oka_witness(arr);
    if (big_n > 0) report.product_profile = ProductProfile{big_n - 1, arr.dimension() + 1 - big_n};
  }
  return report;
}

MatrixQ oka_witness(const Arrangement& arr) {
  const Eigen::Index dim = arr.dimension() + 1;
  const auto big_n = static_cast<Eigen::Index>(arr.size());
  if (big_n > dim)
    throw Error(ErrorCode::PreconditionViolated, "coordinate-change witness needs N <= n+1");
  MatrixQ basis = arr.matrix();
  if (rank(basis) < big_n)
    throw Error(ErrorCode::PreconditionViolated, "coordinate-change witness needs forms in general position");

  // Complete the forms to a basis of the dual space with unit covectors,
  // taken greedily in coordinate order.
  for (Eigen::Index e = 0; e < dim && basis.rows() < dim; ++e) {
    MatrixQ candidate(basis.rows() + 1, dim);
    candidate.topRows(basis.rows()) = basis;
    candidate.row(basis.rows()).setConstant(GaussianRational(0));
    candidate(basis.rows(), e) = 1;
    if (rank(candidate) == candidate.rows()) basis = std::move(candidate);
  }
  auto m = inverse(basis);
  if (!m || !verify_oka_witness(arr, *m))
    throw Error(ErrorCode::PreconditionViolated, "failed to construct an exact coordinate-change witness");
  return *m;
}

bool verify_oka_witness(const Arrangement& arr, const MatrixQ& m) {
  const Eigen::Index dim = arr.dimension() + 1;
  if (m.rows() != dim || m.cols() != dim || !inverse(m)) return false;
  for (std::size_t j = 0; j < arr.size(); ++j) {
    RowVectorQ pulled = arr.form(j).coefficients().transpose() * m;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const bool on_diagonal = c == static_cast<Eigen::Index>(j);
      if (pulled(c).is_zero() == on_diagonal) return false;
    }
  }
  return true;
}

bool complement_membership(const Arrangement& arr, const ProjectivePoint& p) {
  if (p.size() != arr.dimension() + 1)
    throw Error(ErrorCode::LengthMismatch, "point has the wrong number of homogeneous coordinates");
  for (const auto& f : arr.forms())
    if (f(p.coordinates()).is_zero()) return false;
  return true;
}

}  // namespace okalab
