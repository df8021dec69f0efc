#include <doctest.h>

#include <numbers>
#include <functional>
#include <random>

#include "okalab/decomposition.hpp"
#include "okalab/error.hpp"

using namespace okalab;
using Eigen::VectorXcd;

namespace {

UniPolyQ poly(std::initializer_list<GaussianRational> ascending) { return UniPolyQ(std::vector(ascending)); }

UniPolyQ random_poly(std::mt19937_64& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int i = 0; i <= degree; ++i)
    c.emplace_back(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)),
                   mpq_class(static_cast<long>(rng() % 5) - 2));
  if (c.back().is_zero()) c.back() = 1;
  return UniPolyQ(c);
}

std::vector<Complex> circle(int samples, std::function<Complex(Complex)> f) {
  std::vector<Complex> out;
  for (int j = 0; j < samples; ++j) out.push_back(f(std::polar(1.0, 2.0 * std::numbers::pi * j / samples)));
  return out;
}

VectorXcd vec(std::initializer_list<Complex> xs) {
  VectorXcd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("univariate decomposition examples") {
  // (x^2 + 1)/x = x + 1/x.
  auto a = poly_decompose_univariate(poly({1, 0, 1}), poly({0, 1}));
  REQUIRE(a);
  CHECK(a->f == poly({0, 1}));
  CHECK(a->c == GaussianRational(1));
  // x/(x - 1) = 1 + 1/(x - 1).
  auto b = poly_decompose_univariate(poly({0, 1}), poly({-1, 1}));
  REQUIRE(b);
  CHECK(b->f == poly({1}));
  CHECK(b->c == GaussianRational(1));
  // (x^2 + 1)/(x^2 - 1) = 1 + 2/(x^2 - 1).
  auto c = poly_decompose_univariate(poly({1, 0, 1}), poly({-1, 0, 1}));
  REQUIRE(c);
  CHECK(c->f == poly({1}));
  CHECK(c->c == GaussianRational(2));
  // x^3/(x^2 - 1) leaves the remainder x.
  CHECK_FALSE(poly_decompose_univariate(poly({0, 0, 0, 1}), poly({-1, 0, 1})));
  // Constant k: m is a polynomial plus the constant 1/g.
  auto d = poly_decompose_univariate(poly({3, 2}), poly({2}));
  REQUIRE(d);
  CHECK(poly({3, 2}) - poly({2}) * d->f == UniPolyQ::constant(d->c));
  // k = 0: m is infinite, f = 0 and 1/g = 0 requires c = h.
  auto e = poly_decompose_univariate(poly({5}), UniPolyQ());
  REQUIRE(e);
  CHECK(e->f.is_zero());
}

TEST_CASE("decomposition errors") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::UsageError;
  };
  CHECK(code([] { poly_decompose_univariate(UniPolyQ(), UniPolyQ()); }) == ErrorCode::BothZero);
  CHECK(code([] { poly_decompose_univariate(poly({-1, 0, 1}), poly({-1, 1})); }) == ErrorCode::CommonFactor);
}

TEST_CASE("planted decompositions are recovered exactly") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng, static_cast<int>(rng() % 4));
    const auto k = random_poly(rng, 1 + static_cast<int>(rng() % 3));
    const GaussianRational c(mpq_class(1 + static_cast<long>(rng() % 7), 2), mpq_class(static_cast<long>(rng() % 3)));
    const auto h = k * f + UniPolyQ::constant(c);
    auto out = poly_decompose_univariate(h, k);
    REQUIRE(out);
    CHECK(out->f == f);
    CHECK(out->c == c);
    // m(x) = f(x) + c/k(x) at a rational point off the zeros of k.
    const GaussianRational x(mpq_class(3, 7), mpq_class(1, 5));
    if (!k(x).is_zero()) CHECK(h(x) / k(x) == out->f(x) + out->c / k(x));
  }
}

TEST_CASE("winding numbers") {
  for (int w : {-4, -1, 0, 1, 3}) {
    auto loop = circle(256, [w](Complex z) { return std::pow(z, w) * 2.0; });
    CHECK(winding_number(loop) == w);
  }
  // A loop around 0 offset to not enclose it.
  CHECK(winding_number(circle(64, [](Complex z) { return z + 3.0; })) == 0);
  // Additivity over products.
  auto a = circle(512, [](Complex z) { return z * z - 0.25; });
  auto b = circle(512, [](Complex z) { return z - 2.0; });
  auto c = circle(512, [](Complex z) { return (z * z - 0.25) * (z - 2.0); });
  CHECK(winding_number(c) == winding_number(a) + winding_number(b));
  CHECK(winding_number(a) == 2);

  std::vector<Complex> with_zero{1.0, Complex(0, 1), 0.0, -1.0};
  CHECK_THROWS_AS(winding_number(with_zero), Error);
  CHECK_THROWS_AS(winding_number(circle(3, [](Complex z) { return std::pow(z, 5); })), Error);
}

TEST_CASE("the m_nu family is obstructed") {
  for (int nu = 1; nu <= 5; ++nu) {
    MNuPreset preset(nu);
    auto r = loop_obstruction(preset.h, preset.k, preset.loop(64 * nu));
    CAPTURE(nu);
    CHECK(r.winding == -nu);
    CHECK(r.status == DecompositionStatus::Obstructed);
    CHECK(r.max_k_residual < 1e-12);
  }
  CHECK_THROWS_AS(MNuPreset(0), Error);
  // A loop off Z(k) is rejected.
  MNuPreset one(1);
  CHECK_THROWS_AS(loop_obstruction(one.h, one.k, {vec({1.0, 2.0}), vec({2.0, 1.0})}), Error);
}

TEST_CASE("graph membership") {
  const PolyMap one(Polynomial::constant(1, 1.0));
  const PolyMap x(Polynomial::coordinate(1, 0));
  CHECK(graph_membership(one, x, vec({0.0}), 17.0));  // pole of 1/x
  CHECK_FALSE(graph_membership(one, x, vec({1.0}), 1.0));
  CHECK(graph_membership(one, x, vec({2.0}), 1.0));
  MNuPreset m1(1);
  CHECK_FALSE(graph_membership(m1.h, m1.k, vec({1.0, 2.0}), 1.0));
  CHECK(graph_membership(m1.h, m1.k, vec({1.0, 2.0}), 2.0));
  CHECK_THROWS_AS(graph_membership(x, x, vec({0.0}), 1.0), Error);
}
