// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "okalab/covering.hpp"
#include "okalab/decomposition.hpp"
#include "okalab/relations.hpp"
#include "okalab/verification.hpp"
#include "oracles.hpp"

using namespace okalab;

namespace {

namespace pinned {
constexpr double identity = 1e-9;
constexpr double limit = 1e-6;
constexpr double winding_residual = 1e-6;
constexpr std::uint64_t seed = 0x6f6b61;
}  // namespace pinned

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }
Outcome ok(std::string note = {}) { return {true, std::move(note)}; }

std::vector<GaussianRational> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::string form_key(const LinearForm& f) {
  std::string key;
  for (Eigen::Index i = 0; i < f.size(); ++i) key += f.normalized()(i).str() + ",";
  return key;
}

Arrangement coordinate_arrangement(int n, int count) {
  std::vector<VectorQ> rows;
  for (int j = 0; j < count; ++j) {
    VectorQ v = VectorQ::Constant(n + 1, GaussianRational(0));
    v(j) = 1;
    rows.push_back(v);
  }
  return Arrangement::from_rows(n, rows);
}

Outcome unit_square() {
  const auto arr = Arrangement::from_rows(
      2, {make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({-1, 1, 0}), make_vector({-1, 0, 1})});
  const auto r = classify_with_circuits(arr);
  if (r.verdict != Verdict::NotOka || r.reason != Reason::GeneralPositionTooMany) return fail("verdict");
  if (r.dominable_by_cn || r.c_connected) return fail("dominable/c_connected flags");
  if (!r.circuits || r.circuits->size() != 1) return fail("circuit count");
  const Circuit& c = r.circuits->front();
  if (c.indices != IndexSet{0, 1, 2, 3} || c.coefficients != ints({1, -1, -1, 1})) return fail("circuit");
  std::set<std::string> got, want{form_key(LinearForm(make_vector({0, 1, -1}))),
                                  form_key(LinearForm(make_vector({-1, 1, 1}))),
                                  form_key(LinearForm(make_vector({1, 0, 0})))};
  for (const auto& d : diagonal_hyperplanes(c, arr)) got.insert(form_key(d.form));
  if (got != want) return fail("diagonal hyperplanes");
  return ok();
}

Outcome coordinate_hyperplanes() {
  int cases = 0;
  for (int n = 1; n <= 5; ++n)
    for (int count = 0; count <= n + 1; ++count) {
      const auto arr = coordinate_arrangement(n, count);
      const auto r = classify(arr);
      if (r.verdict != Verdict::Oka || !r.oka_witness) return fail("n=" + std::to_string(n) + " N=" + std::to_string(count));
      if (!verify_oka_witness(arr, *r.oka_witness)) return fail("witness fails exact check");
      if (count > 0 && r.product_profile != ProductProfile{count - 1, n + 1 - count}) return fail("product profile");
      if (count == 0 && r.product_profile) return fail("profile for the empty arrangement");
      ++cases;
    }
  return ok(std::to_string(cases) + " cases");
}

Outcome concurrent_lines() {
  const auto arr =
      Arrangement::from_rows(2, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 1, 0})});
  const auto r = classify_with_circuits(arr);
  if (r.verdict != Verdict::NotOka || r.reason != Reason::NotGeneralPosition) return fail("verdict");
  if (!r.circuits || r.circuits->size() != 1) return fail("circuit count");
  const Circuit& c = r.circuits->front();
  if (c.size() != 3 || c.coefficients != ints({1, 1, -1})) return fail("circuit");
  if (!diagonal_hyperplanes(c, arr).empty()) return fail("diagonals present");
  const auto a = associated_subspace_through(c, arr, ProjectivePoint(make_vector({1, 1, 1})));
  const auto cut = annihilator(a.span_basis, 3);
  if (cut.size() != 1 || !(LinearForm(cut[0]) == LinearForm(make_vector({1, -1, 0})))) return fail("associated line");
  return ok();
}

Outcome p4_remark() {
  const auto arr = Arrangement::from_rows(
      4, {make_vector({1, 0, -1, 0, 0}), make_vector({0, -1, 1, 0, 0}), make_vector({0, 1, 0, -1, 0}),
          make_vector({-1, 0, 0, 1, 0}), make_vector({0, 0, 0, 0, 1})});
  const auto cs = circuits(arr);
  if (cs.size() != 1 || cs[0].coefficients != ints({1, 1, 1, 1})) return fail("circuit");
  const auto expected = ints({-2, 1, -2, 3});
  const auto a = associated_subspace_through(cs[0], arr, ProjectivePoint(make_vector({0, 1, 2, 3, 1})));
  std::vector<LinearForm> conditions;
  for (const auto& row : annihilator(a.span_basis, 5)) conditions.emplace_back(row);
  std::vector<VectorQ> samples;
  for (const GaussianRational& t : {GaussianRational(0), GaussianRational(mpq_class(1, 2)), GaussianRational(-3),
                                    GaussianRational(mpq_class(7, 3)), GaussianRational(11)}) {
    VectorQ v(5);
    v << t, t + 1, t + 2, t + 3, GaussianRational(1);
    for (std::size_t j = 0; j < 4; ++j)
      if (arr.form(j)(v) != expected[j]) return fail("pullback of form " + std::to_string(j));
    samples.push_back(v);
  }
  if (!verify_curve_in_subspace(samples, conditions)) return fail("curve leaves the associated subspace");
  return ok();
}

Outcome oracle_corpus() {
  std::mt19937_64 rng(pinned::seed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto arr = oracle::random_arrangement(rng, 4, 7);
    if (is_general_position(arr).general_position != oracle::general_position(arr))
      return fail("general position, trial " + std::to_string(trial));
    std::set<IndexSet> got, want;
    for (const auto& c : circuits(arr)) got.insert(c.indices);
    for (const auto& c : oracle::circuits(arr)) want.insert(IndexSet(c.begin(), c.end()));
    if (got != want) return fail("circuits, trial " + std::to_string(trial));
  }
  return ok("200 arrangements");
}

Outcome localisation() {
  std::mt19937_64 rng(pinned::seed);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  const PolyMap g(Polynomial::coordinate(1, 0));
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(1), one = Eigen::VectorXcd::Ones(1);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXcd s(1);
    s(0) = Complex(u(rng), u(rng));
    const auto c = localise_limit_check(g, zero, s, one, 20, 2);
    const double err = std::abs(c.estimates.back() - s(0));
    worst = std::max(worst, err);
    if (c.steps.back() != 20 || err >= pinned::limit) return fail("exponent 2 error " + std::to_string(err));
  }
  const auto single = localise_limit_check(g, zero, one, one, 20, 1);
  if (single.verdict != LimitVerdict::Diverged || std::abs(single.estimates.back()) <= 1e3)
    return fail("exponent 1 did not diverge");
  char note[96];
  std::snprintf(note, sizeof note, "max error %.2e, single twist |estimate| %.2e", worst,
                std::abs(single.estimates.back()));
  return ok(note);
}

Outcome records_within(const std::vector<VerificationRecord>& records, const std::vector<std::pair<std::string, double>>& required) {
  std::string note;
  for (const auto& [name, tol] : required) {
    auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.name == name; });
    if (it == records.end()) return fail("missing " + name);
    if (it->tolerance > tol || !it->ok() || it->max_error > tol)
      return fail(name + " max error " + std::to_string(it->max_error));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s %.1e", note.empty() ? "" : ", ", name.c_str(), it->max_error);
    note += buf;
  }
  return ok(note);
}

Outcome covering() {
  return records_within(covering_suite(pinned::seed, 1000), {{"covering_residence", pinned::identity},
                                                             {"pi_respects_equivalence", pinned::identity},
                                                             {"spray_base_point", pinned::identity},
                                                             {"transition_consistency", pinned::identity},
                                                             {"spray_well_defined", pinned::identity}});
}

Outcome fibre() {
  return records_within(fibre_suite(pinned::seed, 1000),
                        {{"fibre_identity", pinned::identity}, {"fibre_t_derivative", pinned::limit}});
}

Outcome winding() {
  for (int nu = 1; nu <= 5; ++nu) {
    MNuPreset preset(nu);
    const auto loop = preset.loop(256 * nu);
    const auto r = loop_obstruction(preset.h, preset.k, loop);
    if (r.winding != -nu || r.status != DecompositionStatus::Obstructed)
      return fail("nu=" + std::to_string(nu) + " winding " + std::to_string(r.winding));
    // Independent residual: total argument change against the rounded integer.
    double total = 0;
    for (std::size_t j = 0; j < loop.size(); ++j)
      total += std::arg(preset.h(loop[(j + 1) % loop.size()]) / preset.h(loop[j]));
    if (std::abs(total / (2 * std::numbers::pi) + nu) >= pinned::winding_residual) return fail("residual");
  }
  return ok("no f + 1/g decomposition for nu = 1..5");
}

UniPolyQ random_poly(std::mt19937_64& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int i = 0; i <= degree; ++i)
    c.emplace_back(mpq_class(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4)),
                   mpq_class(static_cast<long>(rng() % 5) - 2));
  if (c.back().is_zero()) c.back() = 1;
  return UniPolyQ(c);
}

Outcome decomposition() {
  std::mt19937_64 rng(pinned::seed);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_poly(rng, static_cast<int>(rng() % 4));
    const auto k = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    const GaussianRational c(mpq_class(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3)));
    const auto h = k * f + UniPolyQ::constant(c);
    const auto out = poly_decompose_univariate(h, k);
    if (!out || h - k * out->f != UniPolyQ::constant(out->c)) return fail("planted instance " + std::to_string(trial));
  }
  int negatives = 0;
  for (int trial = 0; negatives < 20 && trial < 500; ++trial) {
    const auto k = random_poly(rng, 2 + static_cast<int>(rng() % 2));
    const auto h = random_poly(rng, 3 + static_cast<int>(rng() % 2));
    if (gcd(h, k).degree() != 0 || divmod(h, k).second.degree() < 1) continue;
    if (poly_decompose_univariate(h, k)) return fail("witness for a nonconstant remainder");
    ++negatives;
  }
  if (negatives < 20) return fail("too few negative instances");
  return ok("100 planted, 20 without witness");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"unit-square arrangement", 1, unit_square},
      {"coordinate hyperplanes are Oka", 1, coordinate_hyperplanes},
      {"concurrent lines", 1, concurrent_lines},
      {"P4 pullbacks", 1, p4_remark},
      {"circuits and general position vs brute force", 30, oracle_corpus},
      {"localisation limit", 1, localisation},
      {"covering space and spray", 5, covering},
      {"fibre spray", 5, fibre},
      {"winding obstruction for m_nu", 1, winding},
      {"decomposition recovery", 1, decomposition},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && elapsed >= c.seconds) o = fail("over time limit");
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %-46s %7.3f s (limit %g s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, c.name, elapsed,
                c.seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
