#include "okalab/io.hpp"

#include <functional>

#include "okalab/error.hpp"

namespace okalab::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDocument, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

IndexSet index_set_from_json(const json& j) {
  if (!j.is_array()) malformed("index set must be an array");
  IndexSet out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) malformed("indices must be nonnegative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

std::vector<VectorQ> vector_list_from_json(const json& j) {
  if (!j.is_array()) malformed("expected a list of vectors");
  std::vector<VectorQ> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

json vector_list_to_json(const std::vector<VectorQ>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "Oka") return Verdict::Oka;
  if (s == "NotOka") return Verdict::NotOka;
  malformed("unknown verdict '" + s + "'");
}

Reason reason_from_string(const std::string& s) {
  for (auto r : {Reason::GeneralPositionFewForms, Reason::GeneralPositionTooMany, Reason::NotGeneralPosition})
    if (to_string(r) == s) return r;
  malformed("unknown reason '" + s + "'");
}

}  // namespace

json to_json(const GaussianRational& z) { return z.str(); }

json to_json(const VectorQ& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

json to_json(const MatrixQ& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(VectorQ(m.row(r).transpose())));
  return out;
}

json to_json(const Arrangement& arr) {
  json forms = json::array();
  for (const auto& f : arr.forms()) forms.push_back(to_json(f.coefficients()));
  return {{"n", arr.dimension()}, {"forms", forms}};
}

json to_json(const Circuit& c) {
  json coeffs = json::array();
  for (const auto& x : c.coefficients) coeffs.push_back(x.str());
  return {{"indices", c.indices}, {"coefficients", coeffs}};
}

json to_json(const ClassificationReport& r) {
  json out;
  out["verdict"] = to_string(r.verdict);
  out["reason"] = to_string(r.reason);
  out["dominable_by_cn"] = r.dominable_by_cn;
  out["c_connected"] = r.c_connected;
  out["oka_witness"] = r.oka_witness ? to_json(*r.oka_witness) : json(nullptr);
  out["product_profile"] = r.product_profile ? json{{"punctured_planes", r.product_profile->punctured_planes},
                                                    {"planes", r.product_profile->planes}}
                                             : json(nullptr);
  out["failing_subset"] = r.failing_subset ? json(*r.failing_subset) : json(nullptr);
  if (r.circuits) {
    json cs = json::array();
    for (const auto& c : *r.circuits) cs.push_back(to_json(c));
    out["circuits"] = cs;
  } else {
    out["circuits"] = nullptr;
  }
  return out;
}

json to_json(const DiagonalHyperplane& d) {
  return {{"form", to_json(d.form.coefficients())}, {"circuit_index", d.circuit_index}, {"subset", d.subset}};
}

json to_json(const AssociatedSubspace& a) {
  return {{"base_locus_basis", vector_list_to_json(a.base_locus_basis)},
          {"extension_point", to_json(a.extension_point.coordinates())},
          {"span_basis", vector_list_to_json(a.span_basis)}};
}

json to_json(const ObstructionReport& r) {
  json entries = json::array();
  for (const auto& e : r.per_circuit) {
    json diagonals = json::array();
    for (const auto& d : e.diagonals_through_point) diagonals.push_back(to_json(d));
    entries.push_back({{"circuit", to_json(e.circuit)},
                       {"diagonals_through_point", diagonals},
                       {"associated", e.associated ? to_json(*e.associated) : json(nullptr)}});
  }
  return {{"point", to_json(r.point.coordinates())}, {"per_circuit", entries}};
}

json to_json(const TangentConditions& t) {
  return {{"circuit_index", t.circuit_index},
          {"kind", t.kind == SubspaceKind::Diagonal ? "diagonal" : "associated"},
          {"chart", t.chart},
          {"rows", vector_list_to_json(t.rows)}};
}

json to_json(const UniPolyQ& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Polynomial& p) {
  const Eigen::VectorXi deg = p.degrees();
  // Builds the nested dense array for variables var..n-1 with the exponents
  // of earlier variables fixed in `prefix`.
  std::function<json(int, Eigen::VectorXi&)> build = [&](int var, Eigen::VectorXi& prefix) -> json {
    if (var == p.num_vars()) {
      for (const auto& t : p.terms())
        if (t.exponents == prefix) return to_json(t.coefficient);
      return to_json(Complex(0));
    }
    json level = json::array();
    for (int e = 0; e <= std::max(deg(var), 0); ++e) {
      prefix(var) = e;
      level.push_back(build(var + 1, prefix));
    }
    prefix(var) = 0;
    return level;
  };
  Eigen::VectorXi prefix = Eigen::VectorXi::Zero(p.num_vars());
  return {{"nvars", p.num_vars()}, {"coeffs", build(0, prefix)}};
}

json to_json(const VerificationRecord& r) {
  return {{"name", r.name},
          {"checked", r.checked},
          {"passed", r.passed},
          {"max_error", r.max_error},
          {"tolerance", r.tolerance}};
}

json to_json(const LimitCheck& c) {
  json estimates = json::array();
  for (std::size_t i = 0; i < c.estimates.size(); ++i)
    estimates.push_back({{"step", c.steps[i]}, {"estimate", to_json(c.estimates[i])}});
  return {{"target", to_json(c.target)},
          {"estimates", estimates},
          {"final_error", c.final_error},
          {"verdict", to_string(c.verdict)}};
}

GaussianRational scalar_from_json(const json& j) {
  if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  throw Error(ErrorCode::MalformedScalar, "scalar must be a string such as \"1/2+3/4*i\"");
}

VectorQ vector_from_json(const json& j) {
  if (!j.is_array()) malformed("vector must be an array of scalars");
  VectorQ v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = scalar_from_json(j[i]);
  return v;
}

MatrixQ matrix_from_json(const json& j) {
  auto rows = vector_list_from_json(j);
  if (rows.empty()) malformed("matrix must have at least one row");
  MatrixQ m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) malformed("matrix rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  }
  return m;
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.indices = index_set_from_json(field(j, "indices"));
  const auto& coeffs = field(j, "coefficients");
  if (!coeffs.is_array()) malformed("coefficients must be an array");
  for (const auto& x : coeffs) c.coefficients.push_back(scalar_from_json(x));
  return c;
}

ClassificationReport report_from_json(const json& j) {
  ClassificationReport r;
  r.verdict = verdict_from_string(field(j, "verdict").get<std::string>());
  r.reason = reason_from_string(field(j, "reason").get<std::string>());
  r.dominable_by_cn = field(j, "dominable_by_cn").get<bool>();
  r.c_connected = field(j, "c_connected").get<bool>();
  if (const auto& w = field(j, "oka_witness"); !w.is_null()) r.oka_witness = matrix_from_json(w);
  if (const auto& p = field(j, "product_profile"); !p.is_null())
    r.product_profile = ProductProfile{field(p, "punctured_planes").get<int>(), field(p, "planes").get<int>()};
  if (const auto& f = field(j, "failing_subset"); !f.is_null()) r.failing_subset = index_set_from_json(f);
  if (const auto& cs = field(j, "circuits"); !cs.is_null()) {
    r.circuits.emplace();
    for (const auto& c : cs) r.circuits->push_back(circuit_from_json(c));
  }
  return r;
}

DiagonalHyperplane diagonal_from_json(const json& j) {
  return {LinearForm(vector_from_json(field(j, "form"))), field(j, "circuit_index").get<std::size_t>(),
          index_set_from_json(field(j, "subset"))};
}

AssociatedSubspace associated_from_json(const json& j) {
  return {vector_list_from_json(field(j, "base_locus_basis")),
          ProjectivePoint(vector_from_json(field(j, "extension_point"))),
          vector_list_from_json(field(j, "span_basis"))};
}

ObstructionReport obstruction_from_json(const json& j) {
  ObstructionReport r{ProjectivePoint(vector_from_json(field(j, "point"))), {}};
  for (const auto& e : field(j, "per_circuit")) {
    ObstructionEntry entry{circuit_from_json(field(e, "circuit")), {}, std::nullopt};
    for (const auto& d : field(e, "diagonals_through_point")) entry.diagonals_through_point.push_back(diagonal_from_json(d));
    if (const auto& a = field(e, "associated"); !a.is_null()) entry.associated = associated_from_json(a);
    r.per_circuit.push_back(std::move(entry));
  }
  return r;
}

UniPolyQ unipoly_from_json(const json& j) {
  if (!j.is_array()) malformed("polynomial must be a dense ascending list of scalars");
  std::vector<GaussianRational> coeffs;
  for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
  return UniPolyQ(std::move(coeffs));
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    malformed("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::VectorXcd complex_vector_from_json(const json& j) {
  if (!j.is_array()) malformed("expected an array of complex numbers");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Polynomial polynomial_from_json(const json& j) {
  int nvars = 1;
  const json* coeffs = &j;
  if (j.is_object()) {
    nvars = field(j, "nvars").get<int>();
    coeffs = &field(j, "coeffs");
  }
  if (nvars < 1) malformed("nvars must be positive");
  std::vector<Polynomial::Term> terms;
  Eigen::VectorXi prefix = Eigen::VectorXi::Zero(nvars);
  std::function<void(const json&, int)> walk = [&](const json& level, int var) {
    if (var == nvars) {
      terms.push_back({prefix, complex_from_json(level)});
      return;
    }
    if (!level.is_array()) malformed("polynomial nesting depth must equal nvars");
    for (std::size_t e = 0; e < level.size(); ++e) {
      prefix(var) = static_cast<int>(e);
      walk(level[e], var + 1);
    }
    prefix(var) = 0;
  };
  walk(*coeffs, 0);
  return Polynomial(nvars, std::move(terms));
}

}  // namespace okalab::io
