#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corner/compactify.hpp"
#include "corner/sampling.hpp"

#include <cmath>

using namespace corner;

namespace {

PolyCurve make_curve(std::initializer_list<std::initializer_list<int>> coeffs) {
  RatMat m;
  for (const auto& c : coeffs) {
    RatVec v;
    for (int x : c) v.push_back(Rat(x));
    m.push_back(std::move(v));
  }
  return PolyCurve(std::move(m));
}

}  // namespace

TEST_CASE("theta examples") {
  SUBCASE("origin maps to the pole") {
    OctantPoint q = theta(RadialPoint::interior({0.0, 0.0}));
    CHECK(q[0] == doctest::Approx(1.0));
    CHECK(q[1] == 0.0);
    CHECK(q[2] == 0.0);
  }
  SUBCASE("directions land on the equator") {
    OctantPoint q = theta(RadialPoint::direction({1.0, 0.0}));
    CHECK(q[0] == 0.0);
    CHECK(q[1] == doctest::Approx(1.0));
    CHECK(q[2] == 0.0);
  }
  SUBCASE("worked finite point") {
    OctantPoint q = theta(RadialPoint::interior({3.0, 4.0}));
    const double s = 1.0 / std::sqrt(26.0);
    CHECK(q[0] == doctest::Approx(s).epsilon(1e-14));
    CHECK(q[1] == doctest::Approx(3.0 * s).epsilon(1e-14));
    CHECK(q[2] == doctest::Approx(4.0 * s).epsilon(1e-14));
  }
}

TEST_CASE("theta_inverse examples") {
  RadialPoint pole = theta_inverse(OctantPoint(1, {1.0, 0.0, 0.0}));
  CHECK(pole.is_interior());
  CHECK(norm2(pole.vec()) == 0.0);

  RadialPoint dir = theta_inverse(OctantPoint(1, {0.0, 0.6, 0.8}));
  CHECK(dir.is_direction());
  CHECK(dir.vec()[0] == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("theta round trip on random points") {
  Sampler sampler(5);
  double worst = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 6));
    RadialPoint p = trial % 2 == 0
                        ? RadialPoint::interior([&] {
                            std::vector<double> v(n);
                            for (auto& x : v) x = 4.0 * sampler.gaussian();
                            return v;
                          }())
                        : RadialPoint::direction(sampler.unit_vector(n));
    RadialPoint back = theta_inverse(theta(p));
    REQUIRE(back.kind() == p.kind());
    worst = std::max(worst, max_abs_diff(back.vec(), p.vec()));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("theta is equivariant under invertible maps") {
  Sampler sampler(13);
  double worst = 0.0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 4));
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    double det_proxy = 0.0;
    for (auto& row : g)
      for (auto& x : row) x = sampler.gaussian();
    for (int i = 0; i < n; ++i) det_proxy += std::abs(g[i][i]);
    if (det_proxy < 0.3) continue;

    RadialPoint p = trial % 2 == 0
                        ? RadialPoint::interior([&] {
                            std::vector<double> v(n);
                            for (auto& x : v) x = 2.0 * sampler.gaussian();
                            return v;
                          }())
                        : RadialPoint::direction(sampler.unit_vector(n));
    RadialPoint direct = apply_linear(g, p);
    RadialPoint through_chart = theta_inverse(theta(direct));
    if (direct.kind() != through_chart.kind()) continue;  // split-tolerance edge
    worst = std::max(worst, radial_distance(direct, through_chart));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("push_quotient examples") {
  QuotientMap q = quotient_map(2, Subspace::from_span(2, {{Rat(1), Rat(0)}}));

  auto interior = push_quotient(RadialPoint::interior({5.0, 7.0}), q);
  REQUIRE(interior.has_value());
  CHECK(interior->is_interior());
  CHECK(interior->vec()[0] == doctest::Approx(7.0));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto diag = push_quotient(RadialPoint::direction({inv_sqrt2, inv_sqrt2}), q);
  REQUIRE(diag.has_value());
  CHECK(diag->is_direction());
  CHECK(diag->vec()[0] == doctest::Approx(1.0));

  auto collapsed = push_quotient(RadialPoint::direction({1.0, 0.0}), q);
  CHECK_FALSE(collapsed.has_value());
}

TEST_CASE("push_quotient matches the exact projection on finite points") {
  Sampler sampler(19);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(2, 6));
    Subspace y = sampler.subspace(n, static_cast<int>(sampler.uniform_int(1, n - 1)));
    QuotientMap q = quotient_map(n, y);
    RatVec x = sampler.rational_vec(n);
    auto pushed = push_quotient(RadialPoint::interior(to_doubles(x)), q);
    REQUIRE(pushed.has_value());
    worst = std::max(worst, max_abs_diff(pushed->vec(), to_doubles(q.apply(x))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("the chart route agrees with push_quotient off the collapsed sphere") {
  Sampler sampler(29);
  double worst = 0.0;
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(2, 6));
    Subspace y = sampler.subspace(n, static_cast<int>(sampler.uniform_int(1, n - 1)));
    QuotientMap q = quotient_map(n, y);
    RadialPoint p = trial % 2 == 0
                        ? RadialPoint::interior([&] {
                            std::vector<double> v(n);
                            for (auto& x : v) x = 3.0 * sampler.gaussian();
                            return v;
                          }())
                        : RadialPoint::direction(sampler.unit_vector(n));
    auto direct = push_quotient(p, q);
    if (!direct) continue;
    if (p.is_direction() && norm2(direct->vec()) < 1e-3) continue;  // nearly collapsed
    auto charted = push_quotient_via_charts(p, q);
    REQUIRE(charted.has_value());
    REQUIRE(charted->kind() == direct->kind());
    worst = std::max(worst, radial_distance(*charted, *direct));
    ++checked;
  }
  CHECK(checked > 100);
  CHECK(worst <= 1e-9);
}

TEST_CASE("curve limits") {
  SUBCASE("constant curve") {
    RadialPoint lim = curve_limit(make_curve({{0, 5}}));
    CHECK(lim.is_interior());
    CHECK(lim.vec()[1] == 5.0);
  }
  SUBCASE("linear escape") {
    RadialPoint lim = curve_limit(make_curve({{0, 5}, {1, 0}}));
    CHECK(lim.is_direction());
    CHECK(lim.vec()[0] == doctest::Approx(1.0));
    CHECK(lim.vec()[1] == doctest::Approx(0.0));
  }
  SUBCASE("quadratic dominates linear") {
    RadialPoint lim = curve_limit(make_curve({{0, 0}, {3, 4}, {0, 2}}));
    CHECK(lim.is_direction());
    CHECK(lim.vec()[0] == doctest::Approx(0.0));
    CHECK(lim.vec()[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("curve limit matches the numeric oracle at large parameter") {
  // oracle: evaluate far out, embed with theta, compare octant coordinates
  Sampler sampler(37);
  double worst = 0.0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 5));
    const int deg = static_cast<int>(sampler.uniform_int(0, 3));
    PolyCurve c = sampler.curve(n, deg);
    RadialPoint lim = curve_limit(c);
    RadialPoint far = RadialPoint::interior(c.eval_double(1e6));
    const OctantPoint ql = theta(lim);
    const OctantPoint qf = theta(far);
    worst = std::max(worst, max_abs_diff(ql.coords(), qf.coords()));
  }
  CHECK(worst <= 1e-4);  // the oracle itself sits at finite parameter
}

TEST_CASE("curve limit ignores positive rescaling of the top coefficient") {
  Sampler sampler(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 5));
    PolyCurve c = sampler.curve(n, static_cast<int>(sampler.uniform_int(1, 3)));
    RatMat scaled_coeffs = c.coeffs();
    scaled_coeffs.back() = [&] {
      RatVec v = scaled_coeffs.back();
      for (auto& x : v) x *= Rat(7, 3);
      return v;
    }();
    PolyCurve rescaled(scaled_coeffs);
    CHECK(radial_equal(curve_limit(c), curve_limit(rescaled), 1e-12));
  }
}

TEST_CASE("projection commutes with taking limits off the collapsed sphere") {
  Sampler sampler(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(2, 6));
    Subspace y = sampler.subspace(n, static_cast<int>(sampler.uniform_int(1, n - 1)));
    QuotientMap q = quotient_map(n, y);
    PolyCurve c = sampler.curve(n, static_cast<int>(sampler.uniform_int(0, 3)));

    auto pushed = push_quotient(curve_limit(c), q);
    if (!pushed) continue;  // limit lies on the collapsed sphere
    RadialPoint projected_limit = curve_limit(project_curve(c, q));
    if (pushed->kind() != projected_limit.kind()) continue;  // float zero test edge
    CHECK(radial_distance(*pushed, projected_limit) <= 1e-9);
  }
}

TEST_CASE("exact limits are scale-canonical") {
  PolyCurve c = make_curve({{0, 5}, {2, 4}});
  ExactLimit lim = curve_limit_exact(c);
  CHECK(lim.kind == RadialPoint::Kind::kDirection);
  // ray representative scaled so the largest entry is 1
  CHECK(lim.value[0] == Rat(1, 2));
  CHECK(lim.value[1] == Rat(1));
  RatMat tripled = c.coeffs();
  for (auto& x : tripled.back()) x *= 3;
  CHECK(curve_limit_exact(PolyCurve(tripled)).value == lim.value);
}
