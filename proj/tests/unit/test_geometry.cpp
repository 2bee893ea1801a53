#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/random.hpp"
#include "fsimple/errors.hpp"
#include "fsimple/geometry.hpp"

using namespace fsimple;

namespace {

Isometry diag(double x) { return Isometry(x, 0.0, 0.0, 1.0 / x); }

bool fixes(const Isometry& g, const BoundaryPoint& p) {
  if (p.is_infinite()) return g.apply(p).is_infinite();
  const BoundaryPoint q = g.apply(p);
  return !q.is_infinite() && std::abs(q.value() - p.value()) < 1e-9 * std::max(1.0, std::abs(p.value()));
}

}  // namespace

TEST_CASE("compose: identity, inverse and parabolic examples") {
  CHECK(approx_equal(Isometry() * Isometry(), Isometry()));
  const Isometry g = diag(std::exp(1.0));
  CHECK((g * g.inverse()).is_identity());
  const Isometry t = Isometry(1, 1, 0, 1) * Isometry(1, 2, 0, 1);
  CHECK(approx_equal(t, Isometry(1, 3, 0, 1)));
}

TEST_CASE("isometries are normalized and compared up to sign") {
  const Isometry g(2.0, 1.0, 1.0, 3.0);  // determinant 5
  CHECK(std::abs(g.determinant() - 1.0) <= kDetEps);
  const Isometry h(-g.a(), -g.b(), -g.c(), -g.d());
  CHECK(g.entries() == h.entries());
  CHECK(g.a() > 0.0);
  CHECK_THROWS_AS(Isometry(1.0, 2.0, 2.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(Isometry(NAN, 0.0, 0.0, 1.0), InvalidArgument);
}

TEST_CASE("classify examples") {
  CHECK(classify(Isometry(1, 1, 0, 1)) == IsometryKind::parabolic);
  CHECK(classify(Isometry(2, 0, 0, 0.5)) == IsometryKind::hyperbolic);
  CHECK(classify(Isometry(0, -1, 1, 0)) == IsometryKind::elliptic);
  CHECK_THROWS_WITH_AS(classify(Isometry()), "trivial element", InvalidArgument);
}

TEST_CASE("translation_length examples") {
  CHECK(translation_length(diag(std::exp(1.0))) == doctest::Approx(2.0).epsilon(1e-12));
  // Trace 3: 2 arccosh(3/2), evaluated independently as 2 log((3 + sqrt 5)/2).
  const double expected = 2.0 * std::log((3.0 + std::sqrt(5.0)) / 2.0);
  CHECK(std::abs(translation_length(Isometry(2, 1, 1, 1)) - expected) < 1e-12);
  CHECK(std::abs(expected - 1.92485) < 1e-5);
  CHECK_THROWS_AS(translation_length(Isometry(1, 1, 0, 1)), InvalidArgument);
  CHECK_THROWS_AS(translation_length(Isometry(0, -1, 1, 0)), InvalidArgument);
}

TEST_CASE("axis examples") {
  const GeodesicLine l = axis(diag(std::exp(1.0)));
  CHECK(l == GeodesicLine(BoundaryPoint::real(0.0), BoundaryPoint::infinity()));
  const GeodesicLine m = axis(Isometry(2, 1, 1, 1));
  CHECK(std::abs(m.first().value() - (1.0 - std::sqrt(5.0)) / 2.0) < 1e-12);
  CHECK(std::abs(m.second().value() - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-12);
  CHECK_THROWS_AS(axis(Isometry(1, 1, 0, 1)), InvalidArgument);
  // Attracting end: the point approached by forward iterates.
  const OrientedAxis ax = oriented_axis(diag(2.0));
  CHECK(ax.attracting.is_infinite());
  CHECK(ax.repelling.value() == 0.0);
}

TEST_CASE("geodesic lines ignore endpoint order") {
  const auto a = BoundaryPoint::real(-1.0), b = BoundaryPoint::real(2.0), inf = BoundaryPoint::infinity();
  CHECK(GeodesicLine(a, b) == GeodesicLine(b, a));
  CHECK(GeodesicLine(inf, a) == GeodesicLine(a, inf));
  CHECK(GeodesicLine(inf, a).second().is_infinite());
  CHECK_THROWS_AS(GeodesicLine(a, a), InvalidArgument);
  CHECK_THROWS_AS(BoundaryPoint::real(INFINITY), InvalidArgument);
  CHECK_THROWS_AS(inf.value(), InvalidArgument);
}

TEST_CASE("link examples") {
  const auto P = [](double x) { return BoundaryPoint::real(x); };
  const GeodesicLine vert(P(0), BoundaryPoint::infinity());
  CHECK(link(vert, GeodesicLine(P(-1), P(1))));
  CHECK_FALSE(link(GeodesicLine(P(0), P(1)), GeodesicLine(P(2), P(3))));
  CHECK_FALSE(link(vert, GeodesicLine(P(1), P(2))));
  CHECK_THROWS_WITH_AS(link(vert, GeodesicLine(P(0), P(1))), "degenerate configuration", InvalidArgument);
}

TEST_CASE("hyperbolic_distance examples") {
  const Point I(0.0, 1.0);
  CHECK(hyperbolic_distance(I, I) == doctest::Approx(0.0));
  CHECK(hyperbolic_distance(I, std::exp(1.0) * I) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(hyperbolic_distance(I, Point(1.0, 1.0)) - std::log(1.5 + std::sqrt(1.25))) < 1e-12);
  CHECK(std::abs(hyperbolic_distance(I, Point(1.0, 1.0)) - 0.96242) < 1e-5);
  CHECK_THROWS_AS(hyperbolic_distance(I, Point(1.0, 0.0)), InvalidArgument);
}

TEST_CASE("property: composition is associative") {
  testgen::Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    const Isometry f = testgen::isometry(rng), g = testgen::isometry(rng), h = testgen::isometry(rng);
    const Isometry x = (f * g) * h, y = f * (g * h);
    const double scale = std::max({1.0, std::abs(x.a()), std::abs(x.b()), std::abs(x.c()), std::abs(x.d())});
    CHECK(x.distance(y) <= 1e-9 * scale);
    CHECK(std::abs(x.determinant() - 1.0) <= kDetEps * scale * scale);
  }
}

TEST_CASE("property: translation length is a conjugacy invariant and scales with powers") {
  testgen::Rng rng(202);
  for (int i = 0; i < 300; ++i) {
    const Isometry g = testgen::hyperbolic(rng, 3.0), h = testgen::isometry(rng, 3.0);
    const double l = translation_length(g);
    CHECK(std::abs(translation_length(h * g * h.inverse()) - l) < 1e-9 * std::max(1.0, l));
    Isometry p = g;
    const int n = testgen::uniform_int(rng, 2, 10);
    for (int k = 1; k < n; ++k) p = p * g;
    CHECK(std::abs(translation_length(p) - n * l) < 1e-9 * std::max(1.0, n * l));
  }
}

TEST_CASE("property: axis endpoints are fixed and equivariant") {
  testgen::Rng rng(303);
  for (int i = 0; i < 300; ++i) {
    const Isometry g = testgen::hyperbolic(rng, 4.0), h = testgen::isometry(rng, 2.0);
    const OrientedAxis ax = oriented_axis(g);
    CHECK(fixes(g, ax.attracting));
    CHECK(fixes(g, ax.repelling));
    const GeodesicLine moved = axis(h * g * h.inverse());
    const GeodesicLine image = h.apply(axis(g));
    CHECK(chordal_distance(moved.first(), image.first()) < 1e-8);
    CHECK(chordal_distance(moved.second(), image.second()) < 1e-8);
  }
}

TEST_CASE("property: link is symmetric and matches a direct crossing check") {
  testgen::Rng rng(404);
  for (int i = 0; i < 2000; ++i) {
    std::vector<double> x(4);
    for (double& v : x) v = testgen::uniform(rng, -5.0, 5.0);
    const GeodesicLine l1(BoundaryPoint::real(x[0]), BoundaryPoint::real(x[1]));
    const GeodesicLine l2(BoundaryPoint::real(x[2]), BoundaryPoint::real(x[3]));
    CHECK(link(l1, l2) == link(l2, l1));
    const double lo = std::min(x[0], x[1]), hi = std::max(x[0], x[1]);
    const bool in2 = x[2] > lo && x[2] < hi, in3 = x[3] > lo && x[3] < hi;
    CHECK(link(l1, l2) == (in2 != in3));
    // Same pair with one end sent to infinity by an isometry.
    const Isometry h = Isometry(0.0, -1.0, 1.0, -x[0]);
    CHECK(link(h.apply(l1), h.apply(l2)) == link(l1, l2));
  }
}

TEST_CASE("property: distance is symmetric, invariant and satisfies the triangle inequality") {
  testgen::Rng rng(505);
  for (int i = 0; i < 500; ++i) {
    const Point p = testgen::point(rng), q = testgen::point(rng), r = testgen::point(rng);
    const Isometry g = testgen::isometry(rng, 3.0);
    const double pq = hyperbolic_distance(p, q);
    CHECK(std::abs(pq - hyperbolic_distance(q, p)) < 1e-9);
    CHECK(std::abs(pq - hyperbolic_distance(g.apply(p), g.apply(q))) < 1e-7 * std::max(1.0, pq));
    CHECK(hyperbolic_distance(p, r) <= pq + hyperbolic_distance(q, r) + 1e-9);
  }
}

TEST_CASE("frames and projections") {
  testgen::Rng rng(606);
  for (int i = 0; i < 200; ++i) {
    const Isometry g = testgen::hyperbolic(rng, 4.0);
    const OrientedAxis ax = oriented_axis(g);
    const Point z = testgen::point(rng);
    const Point foot = project_to_line(z, ax);
    const Isometry F = frame_for(ax, foot);
    const Point fz = F.apply(foot);
    CHECK(std::abs(fz - Point(0.0, 1.0)) < 1e-7);
    // The frame conjugates g to a diagonal translation by its length.
    const Isometry D = F * g * F.inverse();
    CHECK(std::abs(D.b()) < 1e-7 * std::max(1.0, std::abs(D.a())));
    CHECK(std::abs(D.c()) < 1e-7 * std::max(1.0, std::abs(D.a())));
    // The foot is the nearest point of the line.
    const Isometry T = translation_along(ax, 0.1);
    CHECK(hyperbolic_distance(z, foot) <= hyperbolic_distance(z, T.apply(foot)) + 1e-12);
    CHECK(hyperbolic_distance(z, foot) <= hyperbolic_distance(z, T.inverse().apply(foot)) + 1e-12);
  }
}

TEST_CASE("disk model maps") {
  const Point I(0.0, 1.0);
  CHECK(std::abs(to_disk(I)) < 1e-15);
  CHECK(std::abs(from_disk(to_disk(Point(0.3, 2.0))) - Point(0.3, 2.0)) < 1e-12);
  CHECK(BoundaryPoint::infinity().disk_point() == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(BoundaryPoint::real(0.0).disk_angle() - std::numbers::pi) < 1e-15);
  CHECK(std::abs(rotation_about_i(0.3).apply(I) - I) < 1e-15);
  CHECK(std::abs(hyperbolic_distance(I, translation_up(1.5).apply(I)) - 1.5) < 1e-12);
}
