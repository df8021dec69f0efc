#include <doctest.h>

#include <algorithm>
#include <random>

#include "okalab/arrangement.hpp"
#include "okalab/error.hpp"
#include "oracles.hpp"

using namespace okalab;

namespace {

Arrangement coordinate_forms(int n, int count) {
  std::vector<VectorQ> rows;
  for (int j = 0; j < count; ++j) {
    VectorQ v = VectorQ::Constant(n + 1, GaussianRational(0));
    v(j) = 1;
    rows.push_back(v);
  }
  return Arrangement::from_rows(n, rows);
}

Arrangement unit_square() {
  return Arrangement::from_rows(2, {make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({-1, 1, 0}),
                                    make_vector({-1, 0, 1})});
}

Arrangement concurrent_lines() {
  return Arrangement::from_rows(2, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 1, 0})});
}

ErrorCode parse_error(const char* doc) {
  try {
    parse_arrangement(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse_arrangement to throw");
  return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("linear forms and points are normalized") {
  LinearForm f(make_vector({0, 2, -4}));
  CHECK(exactly_equal(f.coefficients(), make_vector({0, 2, -4})));
  CHECK(exactly_equal(f.normalized(), make_vector({0, 1, -2})));
  CHECK(LinearForm(make_vector({0, GaussianRational::i(), 0})) == LinearForm(make_vector({0, 1, 0})));
  CHECK_THROWS_AS(LinearForm(make_vector({0, 0})), Error);

  ProjectivePoint p(make_vector({0, 3, 6}));
  CHECK(exactly_equal(p.coordinates(), make_vector({0, 1, 2})));
  CHECK(p.chart() == 1);
}

TEST_CASE("parse_arrangement") {
  auto coords = parse_arrangement(R"({"n": 2, "forms": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  CHECK(coords.size() == 3);
  CHECK(coords.dimension() == 2);

  auto square = parse_arrangement(R"({"n": 2, "forms": [["0","1","0"],["0","0","1"],["-1","1","0"],["-1","0","1"]]})");
  CHECK(square.size() == 4);

  CHECK(parse_error(R"({"n": 2, "forms": [["0","1","0"],["0","2","0"]]})") == ErrorCode::DuplicateHyperplane);
  CHECK(parse_error(R"({"n": 2, "forms": [["0","0","0"]]})") == ErrorCode::ZeroForm);
  CHECK(parse_error(R"({"n": 2, "forms": [["0","1"]]})") == ErrorCode::LengthMismatch);
  CHECK(parse_error(R"({"n": 2, "forms": [["0","1","x"]]})") == ErrorCode::MalformedScalar);
  CHECK(parse_error(R"({"n": 2, "forms": [["0","1",1.5]]})") == ErrorCode::MalformedScalar);
  CHECK(parse_error(R"({"forms": []})") == ErrorCode::MalformedDocument);
  CHECK(parse_error("not json") == ErrorCode::MalformedDocument);
  CHECK(parse_error(R"({"n": 0, "forms": []})") == ErrorCode::MalformedDocument);
}

TEST_CASE("general position") {
  auto gp = is_general_position(coordinate_forms(3, 4));
  CHECK(gp.general_position);
  CHECK_FALSE(gp.failing_subset);

  CHECK(is_general_position(unit_square()).general_position);
  CHECK(oracle::general_position(unit_square()));

  gp = is_general_position(concurrent_lines());
  CHECK_FALSE(gp.general_position);
  REQUIRE(gp.failing_subset);
  CHECK(*gp.failing_subset == IndexSet{0, 1, 2});
}

TEST_CASE("failing subset is the smallest, then lexicographically least") {
  // x0, x1, x2, x0+x1 in P^3: {0,1,3} is the only dependent triple.
  auto arr = Arrangement::from_rows(3, {make_vector({1, 0, 0, 0}), make_vector({0, 1, 0, 0}),
                                        make_vector({0, 0, 1, 0}), make_vector({1, 1, 0, 0})});
  auto gp = is_general_position(arr);
  REQUIRE(gp.failing_subset);
  CHECK(*gp.failing_subset == IndexSet{0, 1, 3});
}

TEST_CASE("classification of the worked examples") {
  auto oka = classify(coordinate_forms(2, 3));
  CHECK(oka.verdict == Verdict::Oka);
  CHECK(oka.reason == Reason::GeneralPositionFewForms);
  CHECK(oka.dominable_by_cn);
  CHECK(oka.c_connected);
  REQUIRE(oka.product_profile);
  CHECK(oka.product_profile->punctured_planes == 2);
  CHECK(oka.product_profile->planes == 0);
  REQUIRE(oka.oka_witness);

  auto square = classify(unit_square());
  CHECK(square.verdict == Verdict::NotOka);
  CHECK(square.reason == Reason::GeneralPositionTooMany);
  CHECK_FALSE(square.dominable_by_cn);
  CHECK_FALSE(square.c_connected);
  CHECK_FALSE(square.oka_witness);
  CHECK_FALSE(square.failing_subset);

  auto lines = classify(concurrent_lines());
  CHECK(lines.verdict == Verdict::NotOka);
  CHECK(lines.reason == Reason::NotGeneralPosition);
  CHECK_FALSE(lines.dominable_by_cn);
  CHECK_FALSE(lines.c_connected);
  CHECK(lines.failing_subset == IndexSet{0, 1, 2});
}

TEST_CASE("empty arrangement is Oka with identity witness") {
  Arrangement empty(3, {});
  auto r = classify(empty);
  CHECK(r.verdict == Verdict::Oka);
  REQUIRE(r.oka_witness);
  CHECK(exactly_equal(*r.oka_witness, MatrixQ(MatrixQ::Identity(4, 4))));
  CHECK_FALSE(r.product_profile);
}

TEST_CASE("oka_witness") {
  CHECK(exactly_equal(oka_witness(coordinate_forms(3, 4)), MatrixQ(MatrixQ::Identity(4, 4))));
  CHECK(exactly_equal(oka_witness(coordinate_forms(3, 2)), MatrixQ(MatrixQ::Identity(4, 4))));

  auto arr = Arrangement::from_rows(2, {make_vector({1, 0, 0}), make_vector({1, 1, 0})});
  const MatrixQ m = oka_witness(arr);
  CHECK(verify_oka_witness(arr, m));
  // x0 o M is proportional to x0 and (x0 + x1) o M to x1.
  RowVectorQ first = arr.form(0).coefficients().transpose() * m;
  RowVectorQ second = arr.form(1).coefficients().transpose() * m;
  CHECK(exactly_equal(first, make_vector({1, 0, 0}).transpose()));
  CHECK(exactly_equal(second, make_vector({0, 1, 0}).transpose()));

  try {
    oka_witness(unit_square());
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  CHECK_THROWS_AS(oka_witness(concurrent_lines()), Error);
  CHECK_FALSE(verify_oka_witness(arr, MatrixQ(MatrixQ::Identity(3, 3) * GaussianRational(0))));
}

TEST_CASE("complement membership") {
  auto coords = coordinate_forms(2, 3);
  CHECK(complement_membership(coords, ProjectivePoint(make_vector({1, 1, 1}))));
  CHECK_FALSE(complement_membership(coords, ProjectivePoint(make_vector({0, 1, 1}))));
  CHECK(complement_membership(unit_square(), ProjectivePoint(make_vector({1, 2, 3}))));
  CHECK_THROWS_AS(complement_membership(coords, ProjectivePoint(make_vector({1, 1}))), Error);
}

TEST_CASE("classify agrees with the brute-force oracle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const auto arr = oracle::random_arrangement(rng, 4, 7);
    CAPTURE(trial);
    const bool gp = oracle::general_position(arr);
    const bool few = static_cast<int>(arr.size()) <= arr.dimension() + 1;
    const auto report = classify(arr);
    CHECK(is_general_position(arr).general_position == gp);
    CHECK((report.verdict == Verdict::Oka) == (gp && few));
    CHECK((report.reason == Reason::GeneralPositionTooMany) == (gp && !few));
    CHECK(report.oka_witness.has_value() == (report.verdict == Verdict::Oka));
    if (report.oka_witness) CHECK(verify_oka_witness(arr, *report.oka_witness));
    if (report.verdict == Verdict::NotOka) {
      CHECK_FALSE(report.dominable_by_cn);
      CHECK_FALSE(report.c_connected);
    }
    if (report.failing_subset) CHECK_FALSE(oracle::independent(arr, {report.failing_subset->begin(), report.failing_subset->end()}));
  }
}

TEST_CASE("classify is invariant under permutation and rescaling") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> scale(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto arr = oracle::random_arrangement(rng, 4, 7);
    std::vector<std::size_t> order(arr.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<VectorQ> rows;
    for (auto j : order) {
      GaussianRational c{mpq_class(scale(rng), scale(rng)), mpq_class(scale(rng) - 3)};
      rows.push_back(arr.form(j).coefficients() * c);
    }
    const auto permuted = Arrangement::from_rows(arr.dimension(), rows);
    const auto a = classify(arr);
    const auto b = classify(permuted);
    CHECK(a.verdict == b.verdict);
    CHECK(a.reason == b.reason);
    CHECK(a.failing_subset.has_value() == b.failing_subset.has_value());
    if (a.failing_subset) CHECK(a.failing_subset->size() == b.failing_subset->size());
  }
}
