#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wrightlens/bounds.hpp"
#include "wrightlens/radii.hpp"

using namespace wrightlens;
using cd = std::complex<double>;

namespace {

RadiusQuery single(RadiusKind kind, int n, double rho) {
  RadiusQuery q;
  q.kind = kind;
  q.rho = rho;
  q.weights = single_weight(n);
  q.n_max = n;
  return q;
}

}  // namespace

TEST_CASE("constraint sum examples") {
  auto q = single(RadiusKind::Starlike, 1, 0.0);
  for (double r : {0.0, 0.3, 0.9}) CHECK(constraint_sum(q, r) == doctest::Approx(3 * r * r));
  q = single(RadiusKind::Convex, 2, 0.0);
  for (double r : {0.0, 0.3, 0.9}) CHECK(constraint_sum(q, r) == doctest::Approx(8 * r * r * r));
  q = single(RadiusKind::Convex, 2, 0.4);
  CHECK(constraint_sum(q, 0.5) == doctest::Approx((8 - 0.8) / 0.6 * 0.125));
}

TEST_CASE("radius examples") {
  auto r = solve_radius(single(RadiusKind::Starlike, 1, 0.0));
  CHECK(std::abs(r.radius - 1 / std::sqrt(3.0)) < 1e-9);
  CHECK(r.bracket_hi - r.bracket_lo <= 1e-9);
  CHECK(r.bracket_lo <= 1 / std::sqrt(3.0));
  CHECK(r.residual <= 1.0);
  CHECK(std::abs(r.residual - 1.0) <= 1e-8);
  CHECK_FALSE(r.unconstrained);
  CHECK_FALSE(r.truncation_warning);

  r = solve_radius(single(RadiusKind::Convex, 2, 0.0));
  CHECK(std::abs(r.radius - 0.5) < 1e-9);

  r = solve_radius(single(RadiusKind::Starlike, 1, 0.5));
  CHECK(std::abs(r.radius - std::sqrt(0.5 / 2.5)) < 1e-9);
}

TEST_CASE("bisection agrees with the single-term closed form") {
  for (auto kind : {RadiusKind::Starlike, RadiusKind::Convex})
    for (int n : {1, 2, 3, 7, 20})
      for (double rho : {0.0, 0.25, 0.5, 0.9, 0.99}) {
        auto q = single(kind, n, rho);
        const double closed = extremal_radius(kind, rho, n);
        const auto r = solve_radius(q);
        CHECK(closed - r.radius >= 0.0);
        CHECK(closed - r.radius <= q.tol);
      }
}

TEST_CASE("extremal curves") {
  CHECK(extremal_radius(RadiusKind::Starlike, 0.0, 1) == doctest::Approx(0.5773502691896258));
  CHECK(extremal_radius(RadiusKind::Convex, 0.0, 2) == doctest::Approx(0.5));
  const auto c1 = extremal_curve(RadiusKind::Starlike, {0.0, 0.3, 0.999999}, 1);
  CHECK(c1.size() == 3);
  CHECK(c1[1].second == doctest::Approx(std::sqrt(0.7 / 2.7)));
  CHECK(c1[2].second < 1e-3);
  const auto c2 = extremal_curve(RadiusKind::Convex, {0.3, 0.999999}, 2);
  CHECK(c2[0].second == doctest::Approx(std::cbrt(0.7 / (8 - 0.6))));
  CHECK(c2[1].second < 1e-2);
  CHECK_THROWS_AS(extremal_radius(RadiusKind::Convex, 1.0, 2), ParameterError);
  CHECK_THROWS_AS(extremal_radius(RadiusKind::Convex, 0.0, 0), ParameterError);
}

TEST_CASE("query validation") {
  auto q = single(RadiusKind::Starlike, 1, 0.0);
  q.rho = 1.0;
  CHECK_THROWS_AS(solve_radius(q), ParameterError);
  q = single(RadiusKind::Starlike, 1, 0.0);
  q.tol = 1e-13;
  CHECK_THROWS_AS(solve_radius(q), ParameterError);
  q = single(RadiusKind::Starlike, 1, 0.0);
  q.weights[0] = 0.0;
  CHECK_THROWS_AS(solve_radius(q), ParameterError);
  q = single(RadiusKind::Starlike, 1, 0.0);
  q.weights[0] = -1.0;
  CHECK_THROWS_AS(solve_radius(q), ParameterError);
  q = single(RadiusKind::Starlike, 1, 0.0);
  q.n_max = 2;
  CHECK_THROWS_AS(solve_radius(q), ParameterError);
}

TEST_CASE("small weights leave the disk unconstrained") {
  auto q = single(RadiusKind::Starlike, 1, 0.0);
  q.weights[0] = 1e-3;
  const auto r = solve_radius(q);
  CHECK(r.unconstrained);
  CHECK(r.radius == kRadiusCeiling);
}

TEST_CASE("an overflowing sum counts as above one") {
  RadiusQuery q;
  q.weights = single_weight(40) * 1e307;
  q.n_max = 40;
  CHECK(std::isinf(constraint_sum(q, kRadiusCeiling)));
  const auto r = solve_radius(q);
  CHECK(std::isfinite(r.radius));
  CHECK(r.radius > 0.0);
  CHECK(constraint_sum(q, r.radius) <= 1.0);
}

TEST_CASE("radius is monotone in rho and in the weights") {
  const auto cp = ClassParams::make(0.3, 0.2, 2);
  RadiusQuery q;
  q.weights = scaled_bounds(cp, 60);
  q.n_max = 30;
  for (auto kind : {RadiusKind::Starlike, RadiusKind::Convex}) {
    q.kind = kind;
    double prev = 1.0;
    for (double rho : {0.0, 0.1, 0.3, 0.6, 0.9}) {
      q.rho = rho;
      const double r = solve_radius(q).radius;
      CHECK(r <= prev);
      prev = r;
    }
  }
  q.rho = 0.2;
  q.kind = RadiusKind::Starlike;
  const double base = solve_radius(q).radius;
  RadiusQuery heavier = q;
  heavier.weights[3] *= 5;
  CHECK(solve_radius(heavier).radius <= base);
}

TEST_CASE("convex radius never exceeds the starlike radius") {
  for (double lam : {0.0, 0.2, 0.45}) {
    RadiusQuery q;
    q.weights = scaled_bounds(ClassParams::make(0, lam, 2), 60);
    q.n_max = 30;
    for (double rho : {0.0, 0.5}) {
      q.rho = rho;
      q.kind = RadiusKind::Starlike;
      const double star = solve_radius(q).radius;
      q.kind = RadiusKind::Convex;
      CHECK(solve_radius(q).radius <= star);
    }
  }
}

TEST_CASE("doubling the truncation flags unconverged tails") {
  RadiusQuery q;
  q.weights = Eigen::VectorXd::Constant(40, 1.0);
  q.n_max = 3;
  const auto r = solve_radius(q);
  CHECK(r.truncation_warning);
  CHECK(r.radius_doubled < r.radius);

  q.weights = scaled_bounds(ClassParams::make(0, 0, 2), 100);
  q.n_max = 50;
  CHECK_FALSE(solve_radius(q).truncation_warning);
}

TEST_CASE("function weights") {
  const Laurent f{cd(3), cd(0, -4)};
  const auto w = function_weights(f, Wright::make(0, 1));
  CHECK(w[0] == doctest::Approx(3));
  CHECK(w[1] == doctest::Approx(2));
}

TEST_CASE("starlike predicate examples") {
  for (double rho : {0.0, 0.5, 0.9}) {
    const auto p = starlike_predicate(Laurent::pole(), rho, 0.9);
    CHECK(p.holds);
    CHECK(p.max_modulus < 1e-15);
    CHECK(p.defining_holds);
  }
  // |2z^2/(1+z^2)| peaks where z^2 is real and negative: 1.62/0.19 at z = 0.9i.
  const Laurent h{cd(1)};
  const auto p = starlike_predicate(h, 0.0, 0.9);
  CHECK_FALSE(p.holds);
  CHECK(std::abs(p.witness - cd(0, 0.9)) < 1e-12);
  CHECK(p.max_modulus == doctest::Approx(1.62 / 0.19));
  // At the solved radius the sufficient bound is met with equality.
  const double r = solve_radius(single(RadiusKind::Starlike, 1, 0.0)).radius;
  const auto at = starlike_predicate(h, 0.0, r);
  CHECK(at.holds);
  CHECK(at.max_modulus == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(at.defining_holds);
  CHECK_THROWS_AS(starlike_predicate(h, 0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(starlike_predicate(h, 1.0, 0.5), ParameterError);
}

TEST_CASE("convex predicate examples") {
  const auto p0 = convex_predicate(Laurent::pole(), 0.5, 0.9);
  CHECK(p0.holds);
  CHECK(p0.max_modulus < 1e-15);
  const Laurent h{cd(0), cd(1)};
  const double r = solve_radius(single(RadiusKind::Convex, 2, 0.0)).radius;
  const auto at = convex_predicate(h, 0.0, r);
  CHECK(at.holds);
  CHECK(at.max_modulus == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_FALSE(convex_predicate(h, 0.999, 0.5).holds);
}

TEST_CASE("predicate reports a vanishing image") {
  // H = 1/z + 4z is zero at z = +-0.5i, which lies on the disk grid.
  CHECK_THROWS_AS(starlike_predicate(Laurent{cd(4)}, 0.0, 0.5, GridSpec{8, 4}), DivisionError);
}

TEST_CASE("predicates hold on the extremal model at the solved radius") {
  for (double th : {0.0, 0.6})
    for (double lam : {0.0, 0.2, 0.45})
      for (double rho : {0.0, 0.4}) {
        const auto cp = ClassParams::make(th, lam, 2);
        RadiusQuery q;
        q.rho = rho;
        q.n_max = 25;
        q.weights = scaled_bounds(cp, 50);
        const Laurent model(q.weights.head(25).cast<cd>().eval());
        for (auto kind : {RadiusKind::Starlike, RadiusKind::Convex}) {
          q.kind = kind;
          const auto res = solve_radius(q);
          const double r = res.radius - 10 * q.tol;
          const auto pred = kind == RadiusKind::Starlike ? starlike_predicate(model, rho, r)
                                                         : convex_predicate(model, rho, r);
          CHECK(pred.holds);
          CHECK(constraint_sum(q, res.radius + 0.05) > 1.0);
        }
      }
}
