#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "okalab/arrangement.hpp"
#include "okalab/covering.hpp"
#include "okalab/decomposition.hpp"
#include "okalab/error.hpp"
#include "okalab/io.hpp"
#include "okalab/relations.hpp"
#include "okalab/verification.hpp"

namespace okalab::cli {

namespace {

using io::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, std::string("invalid JSON: ") + e.what());
  }
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    throw Error(ErrorCode::MalformedDocument, std::string("could not parse ") + what + " as JSON");
  }
}

/// "x0 - x1 + (1/2+1*i)*x2"
std::string form_text(const VectorQ& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto& c = v(i);
    if (c.is_zero()) continue;
    const std::string var = "x" + std::to_string(i);
    std::string term;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      const mpq_class mag = abs(c.real());
      term = mag == 1 ? var : mag.get_str() + "*" + var;
    } else {
      term = "(" + c.str() + ")*" + var;
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string vector_text(const VectorQ& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v(i).str();
  return out + ")";
}

std::string point_text(const VectorQ& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ":" : "") + v(i).str();
  return out + "]";
}

std::string index_text(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string circuit_text(const Circuit& c) {
  std::string out = index_text(c.indices) + " coefficients (";
  for (std::size_t i = 0; i < c.coefficients.size(); ++i) out += (i ? ", " : "") + c.coefficients[i].str();
  return out + ")";
}

ProjectivePoint parse_point(const std::string& text) {
  std::vector<GaussianRational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(GaussianRational::parse(item));
  if (coords.empty()) throw Error(ErrorCode::MalformedScalar, "empty point");
  VectorQ v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
  return ProjectivePoint(v);
}

void emit(std::ostream& out, bool as_json, const json& doc, const std::function<void()>& text) {
  if (as_json)
    out << doc.dump(2) << "\n";
  else
    text();
}

void print_report(std::ostream& out, const ClassificationReport& r) {
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "reason: " << to_string(r.reason) << "\n";
  out << "dominable by C^n: " << (r.dominable_by_cn ? "yes" : "no") << "\n";
  out << "C-connected: " << (r.c_connected ? "yes" : "no") << "\n";
  if (r.product_profile)
    out << "complement: (C*)^" << r.product_profile->punctured_planes << " x C^" << r.product_profile->planes << "\n";
  if (r.failing_subset) out << "dependent subset: " << index_text(*r.failing_subset) << "\n";
  if (r.oka_witness) {
    out << "coordinate change:\n";
    for (Eigen::Index i = 0; i < r.oka_witness->rows(); ++i)
      out << "  " << vector_text(r.oka_witness->row(i).transpose()) << "\n";
  }
  if (r.circuits) {
    out << "circuits: " << r.circuits->size() << "\n";
    for (const auto& c : *r.circuits) out << "  " << circuit_text(c) << "\n";
  }
}

struct Options {
  bool as_json = false;
  std::string input;
  std::string point;
  int nu = 0;
  int samples = 512;
  int steps = 20;
  int exponent = 2;
  std::string suite = "all";
  std::string x0 = "[0]";
  std::string s = "[1]";
  std::string direction;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const auto arr = parse_arrangement(read_file(o.input));
  const auto report = classify_with_circuits(arr);
  emit(out, o.as_json, io::to_json(report), [&] { print_report(out, report); });
  return 0;
}

int cmd_circuits(const Options& o, std::ostream& out) {
  const auto arr = parse_arrangement(read_file(o.input));
  const auto cs = circuits(arr);
  json doc = json::array();
  for (const auto& c : cs) doc.push_back(io::to_json(c));
  emit(out, o.as_json, doc, [&] {
    out << cs.size() << " circuit(s)\n";
    for (const auto& c : cs) out << "  " << circuit_text(c) << "\n";
  });
  return 0;
}

int cmd_diagonals(const Options& o, std::ostream& out) {
  const auto arr = parse_arrangement(read_file(o.input));
  const auto cs = circuits(arr);
  std::vector<DiagonalHyperplane> all;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (auto& d : diagonal_hyperplanes(cs[i], arr, i)) all.push_back(std::move(d));
  json doc = json::array();
  for (const auto& d : all) doc.push_back(io::to_json(d));
  emit(out, o.as_json, doc, [&] {
    out << all.size() << " diagonal hyperplane(s)\n";
    for (const auto& d : all)
      out << "  circuit " << d.circuit_index << ", J = " << index_text(d.subset) << ": "
          << form_text(d.form.coefficients()) << " = 0\n";
  });
  return 0;
}

int cmd_obstructions(const Options& o, std::ostream& out) {
  const auto arr = parse_arrangement(read_file(o.input));
  const auto p = parse_point(o.point);
  const auto report = entire_curve_obstructions(arr, p);
  const auto tangents = tangent_direction_subspaces(arr, p);
  json doc = io::to_json(report);
  doc["tangent_conditions"] = json::array();
  for (const auto& t : tangents) doc["tangent_conditions"].push_back(io::to_json(t));
  emit(out, o.as_json, doc, [&] {
    out << "point " << point_text(p.coordinates()) << "\n";
    if (report.per_circuit.empty()) out << "forms are independent: no obstruction\n";
    for (std::size_t i = 0; i < report.per_circuit.size(); ++i) {
      const auto& e = report.per_circuit[i];
      out << "circuit " << i << ": " << circuit_text(e.circuit) << "\n";
      for (const auto& d : e.diagonals_through_point)
        out << "  diagonal through point: " << form_text(d.form.coefficients()) << " = 0\n";
      if (e.associated) {
        out << "  associated subspace spanned by";
        for (const auto& v : e.associated->span_basis) out << " " << vector_text(v);
        out << "\n";
      }
    }
    for (const auto& t : tangents) {
      out << "tangent conditions (circuit " << t.circuit_index << ", "
          << (t.kind == SubspaceKind::Diagonal ? "diagonal" : "associated") << ", chart x" << t.chart << " = 1):";
      for (const auto& r : t.rows) out << " " << vector_text(r);
      out << "\n";
    }
  });
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const auto arr = parse_arrangement(read_file(o.input));
  const auto m = oka_witness(arr);
  emit(out, o.as_json, io::to_json(m), [&] {
    for (Eigen::Index i = 0; i < m.rows(); ++i) out << vector_text(m.row(i).transpose()) << "\n";
  });
  return 0;
}

int cmd_graph_verify(const Options& o, std::ostream& out) {
  if (o.suite != "covering" && o.suite != "fibre" && o.suite != "all")
    throw Error(ErrorCode::UsageError, "--suite must be covering, fibre or all");
  const auto seed = seed_from_env();
  std::vector<VerificationRecord> records;
  if (o.suite != "fibre") {
    auto r = covering_suite(seed, o.samples);
    records.insert(records.end(), r.begin(), r.end());
  }
  if (o.suite != "covering") {
    auto r = fibre_suite(seed, o.samples);
    records.insert(records.end(), r.begin(), r.end());
  }
  const auto total = aggregate("total", records);
  json doc = {{"checked", total.checked}, {"passed", total.passed}, {"max_error", total.max_error}, {"seed", seed}};
  doc["checks"] = json::array();
  for (const auto& r : records) doc["checks"].push_back(io::to_json(r));
  emit(out, o.as_json, doc, [&] {
    for (const auto& r : records)
      out << r.name << ": " << r.passed << "/" << r.checked << " passed, max error " << r.max_error << "\n";
    out << "total: " << total.passed << "/" << total.checked << "\n";
  });
  return total.ok() ? 0 : 1;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const json doc_in = read_json(o.input);
  if (!doc_in.is_object() || !doc_in.contains("h") || !doc_in.contains("k"))
    throw Error(ErrorCode::MalformedDocument, "expected {\"h\": [...], \"k\": [...]}");
  const auto h = io::unipoly_from_json(doc_in["h"]);
  const auto k = io::unipoly_from_json(doc_in["k"]);
  const auto result = poly_decompose_univariate(h, k);
  json doc;
  if (result) {
    doc = {{"status", to_string(DecompositionStatus::Witness)}, {"f", io::to_json(result->f)}, {"c", result->c.str()}};
  } else {
    doc = {{"status", to_string(DecompositionStatus::Unknown)}, {"detail", "no polynomial witness"}};
  }
  emit(out, o.as_json, doc, [&] {
    if (result)
      out << "m = f + c/k with f = " << result->f << ", c = " << result->c << "\n";
    else
      out << "no polynomial witness (h mod k is not a nonzero constant)\n";
  });
  return 0;
}

int cmd_winding(const Options& o, std::ostream& out) {
  long winding = 0;
  json doc;
  std::optional<LoopObstruction> obstruction;
  if (o.nu > 0) {
    const MNuPreset preset(o.nu);
    obstruction = loop_obstruction(preset.h, preset.k, preset.loop(o.samples));
    winding = obstruction->winding;
    doc = {{"nu", o.nu},
           {"samples", o.samples},
           {"winding", winding},
           {"max_k_residual", obstruction->max_k_residual},
           {"decomposition", to_string(obstruction->status)}};
  } else {
    if (o.input.empty()) throw Error(ErrorCode::UsageError, "winding needs --nu or a loop file");
    const auto loop = io::complex_vector_from_json(read_json(o.input));
    std::vector<Complex> values(loop.data(), loop.data() + loop.size());
    winding = winding_number(values);
    doc = {{"samples", values.size()}, {"winding", winding}};
  }
  emit(out, o.as_json, doc, [&] {
    out << "winding number: " << winding << "\n";
    if (obstruction) {
      if (obstruction->status == DecompositionStatus::Obstructed)
        out << "decomposition: obstructed (no f + 1/g decomposition)\n";
      else
        out << "decomposition: unknown\n";
    }
  });
  return 0;
}

int cmd_limit_check(const Options& o, std::ostream& out) {
  const Polynomial poly = o.input.empty() ? Polynomial::coordinate(1, 0) : io::polynomial_from_json(read_json(o.input));
  const PolyMap g(poly);
  const auto x0 = io::complex_vector_from_json(parse_json_arg(o.x0, "--x0"));
  const auto s = io::complex_vector_from_json(parse_json_arg(o.s, "--s"));
  Eigen::VectorXcd d = o.direction.empty() ? Eigen::VectorXcd::Ones(x0.size())
                                           : io::complex_vector_from_json(parse_json_arg(o.direction, "--direction"));
  const auto check = localise_limit_check(g, x0, s, d, o.steps, o.exponent);
  emit(out, o.as_json, io::to_json(check), [&] {
    for (std::size_t i = 0; i < check.estimates.size(); ++i)
      out << "j=" << check.steps[i] << ": " << check.estimates[i] << "\n";
    out << "target g'(x0)(s) = " << check.target << "\n";
    out << "verdict: " << to_string(check.verdict) << " (error " << check.final_error << ")\n";
  });
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oka/non-Oka classification of hyperplane arrangement complements and graph-complement checks",
               "okalab"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Emit the exact JSON report");

  std::function<int(const Options&, std::ostream&)> action;
  auto arrangement_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Arrangement JSON document")->required();
    sub->add_flag("--json", o.as_json, "Emit the exact JSON report");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  arrangement_cmd("classify", "Oka/non-Oka verdict with certificates", cmd_classify);
  arrangement_cmd("circuits", "Minimal linear relations among the forms", cmd_circuits);
  arrangement_cmd("diagonals", "Diagonal hyperplanes of every circuit", cmd_diagonals);
  arrangement_cmd("witness", "Coordinate change to coordinate hyperplanes", cmd_witness);
  arrangement_cmd("obstructions", "Subspaces confining entire curves through a point", cmd_obstructions)
      ->add_option("--point", o.point, "Homogeneous coordinates, comma separated")
      ->required();

  auto* verify = app.add_subcommand("graph-verify", "Randomized covering-space and spray identity checks");
  verify->add_option("--suite", o.suite, "covering, fibre or all");
  verify->add_option("--samples", o.samples, "Samples per suite")->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.as_json, "Emit the exact JSON report");
  verify->callback([&] { action = cmd_graph_verify; });
  o.samples = 512;

  auto* decompose = app.add_subcommand("decompose", "Polynomial witness for m = h/k = f + 1/g");
  decompose->add_option("input", o.input, "JSON {\"h\": [...], \"k\": [...]}")->required();
  decompose->add_flag("--json", o.as_json, "Emit the exact JSON report");
  decompose->callback([&] { action = cmd_decompose; });

  auto* winding = app.add_subcommand("winding", "Winding number of a loop or of the m_nu preset");
  winding->add_option("input", o.input, "JSON list of [re, im] samples");
  winding->add_option("--nu", o.nu, "Use the m_nu preset")->check(CLI::PositiveNumber);
  winding->add_option("--samples", o.samples, "Loop resolution for the preset")->check(CLI::PositiveNumber);
  winding->add_flag("--json", o.as_json, "Emit the exact JSON report");
  winding->callback([&] { action = cmd_winding; });

  auto* limit = app.add_subcommand("limit-check", "Numerical localisation limit of 1/g(x) - 1/g(x + g(x)^2 s)");
  limit->add_option("input", o.input, "Polynomial g as JSON (default g(x) = x)");
  limit->add_option("--x0", o.x0, "Zero of g, JSON list of [re, im]");
  limit->add_option("--s", o.s, "Spray direction s, JSON list of [re, im]");
  limit->add_option("--direction", o.direction, "Approach direction d, JSON list of [re, im]");
  limit->add_option("--steps", o.steps, "Number of halvings")->check(CLI::PositiveNumber);
  limit->add_option("--exponent", o.exponent, "Twist exponent (2, or 1 for the single twist)")
      ->check(CLI::Range(1, 2));
  limit->add_flag("--json", o.as_json, "Emit the exact JSON report");
  limit->callback([&] { action = cmd_limit_check; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    const int status = e.code() == ErrorCode::UsageError ? 2 : 1;
    if (o.as_json)
      err << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
    else
      err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return status;
  }
}

}  // namespace okalab::cli
