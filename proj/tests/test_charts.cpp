#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corner/charts.hpp"
#include "corner/sampling.hpp"

#include <cmath>

using namespace corner;

TEST_CASE("boundary depth of local models") {
  CHECK(boundary_depth(ModelSubmanifold(3, 2, {1, 3})).b == 1);
  CHECK(boundary_depth(ModelSubmanifold(3, 2, {1, 3})).c == 2);
  CHECK(boundary_depth(ModelSubmanifold(3, 2, {1, 3})).d == 1);

  const auto trivial = boundary_depth(ModelSubmanifold(5, 2, {}));
  CHECK(trivial.b == 0);
  CHECK(trivial.c == 0);
  CHECK(trivial.d == 5);
  CHECK(ModelSubmanifold(5, 2, {}).is_trivial());

  const auto corner_pt = boundary_depth(ModelSubmanifold(4, 4, {1, 2, 3, 4}));
  CHECK(corner_pt.b == 4);
  CHECK(corner_pt.c == 4);
  CHECK(corner_pt.d == 0);

  CHECK_THROWS_AS(ModelSubmanifold(3, 2, {4}), std::invalid_argument);
}

TEST_CASE("kappa splits boundary and interior") {
  OctantPoint xi(1, {0.6, 0.8});
  std::vector<double> x = {1.0, -2.0};

  KappaImage face = kappa(x, xi, 0.0);
  CHECK(face.boundary);
  CHECK(face.second == xi.coords());

  KappaImage inside = kappa(x, xi, 2.0);
  CHECK_FALSE(inside.boundary);
  CHECK(inside.second[0] == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(inside.second[1] == doctest::Approx(1.6).epsilon(1e-14));

  CHECK_THROWS_AS(kappa(x, xi, -1.0), std::invalid_argument);
}

TEST_CASE("kappa round trip") {
  Sampler sampler(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 4));
    const int l = static_cast<int>(sampler.uniform_int(0, n));
    const int np = static_cast<int>(sampler.uniform_int(1, 4));
    const int lp = static_cast<int>(sampler.uniform_int(0, np));
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = i < l ? std::abs(sampler.gaussian()) : sampler.gaussian();
    OctantPoint xi = sampler.octant_point(np, lp);
    const double r = trial % 10 == 0 ? 0.0 : sampler.uniform() * 3.0;

    LocalBlowupPoint p(l, x, xi, r);
    LocalBlowupPoint back = kappa_inverse(kappa(p.x, p.xi, p.r), l);
    CHECK(max_abs_diff(back.x, p.x) <= 1e-12);
    CHECK(std::abs(back.r - p.r) <= 1e-12);
    if (r > 0) CHECK(max_abs_diff(back.xi.coords(), p.xi.coords()) <= 1e-12);
  }
}

TEST_CASE("blow_down collapses the face") {
  OctantPoint xi(0, {1.0, 0.0});
  auto [x0, v0] = blow_down(LocalBlowupPoint(0, {0.5}, xi, 0.0));
  CHECK(v0 == std::vector<double>{0.0, 0.0});

  auto [x1, v1] = blow_down(LocalBlowupPoint(0, {0.5}, xi, 1.0));
  CHECK(v1 == xi.coords());
}

TEST_CASE("blow_down has bounded preimages of bounded sets") {
  // properness in the local model: an image inside a ball of radius R pulls
  // back to data with |x| <= R and r <= R
  Sampler sampler(81);
  for (int trial = 0; trial < 300; ++trial) {
    OctantPoint xi = sampler.octant_point(3, 2);
    std::vector<double> x = {sampler.gaussian(), sampler.gaussian()};
    const double r = sampler.uniform() * 5.0;
    auto [bx, bv] = blow_down(LocalBlowupPoint(0, x, xi, r));
    const double image_norm = std::sqrt(norm2(bx) * norm2(bx) + norm2(bv) * norm2(bv));
    LocalBlowupPoint back = kappa_inverse(KappaImage{bx, bv, r == 0.0, xi.k()}, 0);
    CHECK(norm2(back.x) <= image_norm + 1e-12);
    CHECK(back.r <= image_norm + 1e-12);
  }
}

TEST_CASE("blow-up local model of a center") {
  SUBCASE("reordering presents the center as the first factor") {
    ModelSubmanifold center(4, 2, {1, 3});
    BlowupLocalModel model = blowup_center_model(center);
    CHECK(model.base_dim == 2);
    CHECK(model.base_corner == 1);   // k - b = 2 - 1
    CHECK(model.sphere_dim == 2);    // normal sphere S^1
    CHECK(model.sphere_corner == 1);
    CHECK(model.tangent_indices == std::vector<int>{2, 4});
    CHECK(model.normal_indices == std::vector<int>{1, 3});

    std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    auto [tangent, normal] = model.split(x);
    CHECK(tangent == std::vector<double>{2.0, 4.0});
    CHECK(normal == std::vector<double>{1.0, 3.0});
    CHECK(model.merge(tangent, normal) == x);
  }
  SUBCASE("trivial centers are rejected") {
    CHECK_THROWS_AS(blowup_center_model(ModelSubmanifold(3, 1, {})), std::invalid_argument);
  }
  SUBCASE("center points have zero normal block") {
    ModelSubmanifold center(3, 1, {2});
    BlowupLocalModel model = blowup_center_model(center);
    auto [tangent, normal] = model.split({5.0, 0.0, -7.0});
    CHECK(normal == std::vector<double>{0.0});
    CHECK(tangent == std::vector<double>{5.0, -7.0});
  }
}

TEST_CASE("blow_down round trips with kappa away from the center") {
  Sampler sampler(9);
  for (int trial = 0; trial < 200; ++trial) {
    OctantPoint xi = sampler.octant_point(3, 1);
    std::vector<double> x = {sampler.gaussian()};
    const double r = 0.25 + sampler.uniform();
    auto [bx, bv] = blow_down(LocalBlowupPoint(0, x, xi, r));
    LocalBlowupPoint back = kappa_inverse(KappaImage{bx, bv, false, xi.k()}, 0);
    CHECK(std::abs(back.r - r) <= 1e-12);
    CHECK(max_abs_diff(back.xi.coords(), xi.coords()) <= 1e-12);
  }
}

TEST_CASE("upsilon examples") {
  SUBCASE("psi_1 = 1 keeps the first factor") {
    OctantPoint phi(1, {0.6, 0.8});
    OctantPoint psi(1, {1.0, 0.0});
    MixedOctantPoint out = upsilon(phi, psi);
    CHECK(out.coords()[0] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(out.coords()[1] == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(out.coords()[2] == doctest::Approx(0.0));
  }
  SUBCASE("psi_1 = 0 lands on the blown-up face") {
    OctantPoint phi(1, {0.6, 0.8});
    OctantPoint psi(1, {0.0, 1.0});
    MixedOctantPoint out = upsilon(phi, psi);
    CHECK(out.coords()[0] == 0.0);
    CHECK(out.coords()[1] == 0.0);
    CHECK(out.coords()[2] == doctest::Approx(1.0));
  }
  SUBCASE("worked sample") {
    OctantPoint phi(1, {0.6, 0.8});
    OctantPoint psi(1, {0.5, 0.86602540378443865});
    MixedOctantPoint out = upsilon(phi, psi);
    CHECK(out.coords()[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(out.coords()[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(out.coords()[2] == doctest::Approx(0.86602540378443865).epsilon(1e-12));
    CHECK(std::abs(norm2(out.coords()) - 1.0) <= 1e-12);
  }
}

TEST_CASE("psi examples") {
  SUBCASE("unit eta with zero mu") {
    MixedOctantPoint p(2, 0, 0, 0, {0.6, 0.8, 0.0});
    PsiPair pair = psi_map(p);
    CHECK(pair.phi.coords()[0] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(pair.psi.coords()[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pair.psi.coords()[1] == doctest::Approx(0.0));
  }
  SUBCASE("worked sample") {
    MixedOctantPoint p(2, 0, 0, 0, {0.36, 0.48, 0.8});
    PsiPair pair = psi_map(p);
    CHECK(pair.phi.coords()[0] == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(pair.phi.coords()[1] == doctest::Approx(0.8).epsilon(1e-13));
    CHECK(pair.psi.coords()[0] == doctest::Approx(0.6).epsilon(1e-13));
    CHECK(pair.psi.coords()[1] == doctest::Approx(0.8).epsilon(1e-13));
  }
  SUBCASE("center is rejected") {
    MixedOctantPoint p(1, 0, 1, 0, {0.0, 0.6, 0.8});
    CHECK_THROWS_AS(psi_map(p), std::domain_error);
  }
}

TEST_CASE("upsilon after psi is the inclusion") {
  Sampler sampler(21);
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k)
      for (int np = 0; np <= 3; ++np)
        for (int kp = 0; kp <= np + 1; ++kp) {
          for (int trial = 0; trial < 40; ++trial) {
            MixedOctantPoint p = sampler.mixed_octant_point(n, k, np, kp);
            if (norm2(p.head()) <= 1e-3) continue;  // stay off the center
            MixedOctantPoint back = upsilon(psi_map(p).phi, psi_map(p).psi);
            worst = std::max(worst, max_abs_diff(back.coords(), p.coords()));
          }
        }
  CHECK(worst <= 1e-10);
}

TEST_CASE("blow-down equals upsilon on face data") {
  // on the r = 0 face the blow-down collapses to the center, which is
  // exactly what upsilon does at psi_1 = 0
  Sampler sampler(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 3));
    const int k = static_cast<int>(sampler.uniform_int(0, n));
    const int np = static_cast<int>(sampler.uniform_int(0, 3));
    const int kp = static_cast<int>(sampler.uniform_int(0, np));
    OctantPoint phi = sampler.octant_point(n, k);
    OctantPoint center_dir = sampler.octant_point(np + 1, kp);
    std::vector<double> psi_coords = {0.0};
    psi_coords.insert(psi_coords.end(), center_dir.coords().begin(), center_dir.coords().end());
    MixedOctantPoint out = upsilon(phi, OctantPoint(kp + 1, psi_coords));
    for (int i = 0; i < n; ++i) CHECK(std::abs(out.coords()[i]) <= 1e-12);
    std::vector<double> tail = out.tail();
    CHECK(max_abs_diff(tail, center_dir.coords()) <= 1e-12);
  }
}

TEST_CASE("zeta examples") {
  OctantPoint x(1, {1.0, 0.0});
  OctantPoint y(1, {0.6, 0.8});
  SUBCASE("t = 0 collapses the second factor") {
    auto [ox, v] = zeta(x, y, 0.0);
    CHECK(v == std::vector<double>{0.0, 0.0});
  }
  SUBCASE("t = 1 is the identity on the second factor") {
    auto [ox, v] = zeta(x, y, 1.0);
    CHECK(max_abs_diff(v, y.coords()) == 0.0);
  }
  SUBCASE("negative t is rejected") { CHECK_THROWS_AS(zeta(x, y, -0.5), std::invalid_argument); }
}

TEST_CASE("the comparison square commutes in the local model") {
  Sampler sampler(55);
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m)
    for (int p = 1; p <= 4; ++p) {
      const int km = static_cast<int>(sampler.uniform_int(0, m));
      const int kp = static_cast<int>(sampler.uniform_int(0, p));
      for (int trial = 0; trial < 70; ++trial) {
        OctantPoint x = sampler.octant_point(m, km);
        OctantPoint y = sampler.octant_point(p + 1, kp + 1);
        const double t = trial % 7 == 0 ? 0.0 : sampler.uniform() * 3.0;

        auto [zx, zv] = zeta(x, y, t);
        auto [lhs_first, lhs_second] = beta_one_step(zx, zv);
        auto [rhs_first, rhs_second] = beta_origin(upsilon(x, y), t);

        worst = std::max(worst, max_abs_diff(lhs_first, rhs_first));
        worst = std::max(worst, max_abs_diff(lhs_second, rhs_second));
      }
    }
  CHECK(worst <= 1e-10);
}

TEST_CASE("b_map admits an exact left inverse") {
  Sampler sampler(77);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = static_cast<int>(sampler.uniform_int(1, 4));
    const int p = static_cast<int>(sampler.uniform_int(1, 4));
    const int km = static_cast<int>(sampler.uniform_int(0, m));
    const int kp = static_cast<int>(sampler.uniform_int(0, p));
    OctantPoint x = sampler.octant_point(m, km);
    OctantPoint y = sampler.octant_point(p + 1, kp + 1);
    const double t = trial % 5 == 0 ? 0.0 : sampler.uniform() * 2.0;

    BDomainPoint back = b_left_inverse(b_map(x, y, t));
    worst = std::max(worst, max_abs_diff(back.x.coords(), x.coords()));
    worst = std::max(worst, max_abs_diff(back.y.coords(), y.coords()));
    worst = std::max(worst, std::abs(back.t - t));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("b_map separates distinct inputs") {
  Sampler sampler(99);
  for (int trial = 0; trial < 200; ++trial) {
    OctantPoint x1 = sampler.octant_point(3, 1);
    OctantPoint x2 = sampler.octant_point(3, 1);
    OctantPoint y1 = sampler.octant_point(3, 1);
    OctantPoint y2 = sampler.octant_point(3, 1);
    const double t1 = sampler.uniform();
    const double t2 = sampler.uniform();
    const double input_gap = max_abs_diff(x1.coords(), x2.coords()) +
                             max_abs_diff(y1.coords(), y2.coords()) + std::abs(t1 - t2);
    if (input_gap <= 1e-9) continue;

    BTuple a = b_map(x1, y1, t1);
    BTuple b = b_map(x2, y2, t2);
    const double output_gap = max_abs_diff(a.x.coords(), b.x.coords()) +
                              max_abs_diff(a.z, b.z) +
                              max_abs_diff(a.w.coords(), b.w.coords()) + std::abs(a.t - b.t);
    CHECK(output_gap > 0.0);
  }
}

TEST_CASE("canonical permutation shuffles corner blocks to the front") {
  CanPermutation can(3, 1, 3, 2);
  std::vector<double> xy = {1, 2, 3, 4, 5, 6};  // (x', x'') = (1 | 2 3), (y', y'') = (4 5 | 6)
  std::vector<double> z = can.apply(xy);
  CHECK(z == std::vector<double>{1, 4, 5, 2, 3, 6});
  CHECK(can.unapply(z) == xy);
}

TEST_CASE("chart outputs satisfy octant invariants") {
  Sampler sampler(111);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(sampler.uniform_int(1, 3));
    const int k = static_cast<int>(sampler.uniform_int(0, n));
    const int np = static_cast<int>(sampler.uniform_int(0, 2));
    const int kp = static_cast<int>(sampler.uniform_int(0, np + 1));
    OctantPoint phi = sampler.octant_point(n, k);
    OctantPoint psi = sampler.octant_point(np + 2, kp + 1);
    MixedOctantPoint up = upsilon(phi, psi);
    CHECK(std::abs(norm2(up.coords()) - 1.0) <= 1e-12);
    OctantPoint as_octant = up.to_octant();
    for (int i = 0; i < as_octant.k(); ++i) CHECK(as_octant[i] >= -1e-12);
  }
}
