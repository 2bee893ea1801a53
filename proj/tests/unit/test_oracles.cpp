#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../oracle/brute_ball.hpp"
#include "../oracle/formulas.hpp"
#include "../oracle/tracing.hpp"
#include "fsimple/surface_group.hpp"

using namespace fsimple;

TEST_CASE("oracle: Dirichlet domains tile with area 4 pi") {
  const SurfaceGroup O = octagon_group();
  const SurfaceGroup F = fenchel_nielsen_group(0.7, 0.9, 1.1, 0.2, -0.1, 0.3);
  for (const SurfaceGroup* G : {&O, &F})
    for (const Point c : {Point(0.031, 1.017), Point(-0.043, 0.989), Point(0.067, 1.041)}) {
      const oracle::TracingOracle t(*G, G->basepoint + (c - Point(0.0, 1.0)) * G->basepoint.imag());
      CHECK(std::abs(t.area() - 4.0 * std::numbers::pi) < 1e-8);
      CHECK(t.sides() % 2 == 0);
      CHECK(t.sides() >= 8);
    }
}

TEST_CASE("oracle: traced chords of a generator add up to its length") {
  const SurfaceGroup O = octagon_group();
  const oracle::TracingOracle t(O, Point(0.031, 1.017));
  for (const char* w : {"a", "ab", "aabb", "abcd"}) {
    const auto chords = t.trace(Word::parse(w));
    double len = 0.0;
    for (const auto& ch : chords) len += oracle::klein_distance(ch.from, ch.to);
    CHECK(std::abs(len - translation_length(evaluate(O, Word::parse(w)))) < 1e-8);
  }
}

TEST_CASE("oracle: Mobius products match the library") {
  const SurfaceGroup O = octagon_group();
  const oracle::TracingOracle t(O, Point(0.031, 1.017));
  const Word w = Word::parse("abCdBA");
  const oracle::Mobius m = t.evaluate(w);
  const double tr = std::abs((m.a + m.d).real());
  const double ref = std::abs(evaluate(O, w).trace());
  CHECK(std::abs(tr - ref) < 1e-9 * ref);
}

TEST_CASE("oracle: brute-force balls") {
  const SurfaceGroup O = octagon_group();
  const auto n = oracle::brute_ball_sizes(O, 3);
  REQUIRE(n.size() == 4);
  // Below half the relator length the group ball is the free ball.
  CHECK(n[0] == 1);
  CHECK(n[1] == 9);
  CHECK(n[2] == 65);
  CHECK(n[3] == 457);
}

TEST_CASE("oracle: closed forms") {
  using LD = long double;
  const LD V = 4.0L * std::numbers::pi_v<LD>;
  CHECK(std::abs(static_cast<double>(oracle::dim_lower(0.0L, V)) - 1.0) < 1e-15);
  CHECK(std::abs(static_cast<double>(oracle::dim_lower(V / 10.0L, V)) - 0.5) < 1e-15);
  CHECK(std::abs(static_cast<double>(oracle::hat(0.5L)) - 2.0) < 1e-15);
  CHECK(std::abs(static_cast<double>(oracle::rayleigh(1.0L, 1.0L)) - 2.0 * std::sinh(1.0)) < 1e-15);
  // Upper bound from H with H^2 + cos^2 = 1.
  const LD h = oracle::cheeger_lower(2.0L, V);
  CHECK(std::abs(static_cast<double>(oracle::dim_upper(2.0L, V) - (0.5L + std::sqrt(1.0L - h * h) / 2.0L))) < 1e-15);
  CHECK(std::abs(static_cast<double>(oracle::monotone_value(6)) - 0.983) < 1e-3);
  const auto [m, arg] = oracle::grid_min_cheeger(1.0, 1.0, 1e-4, 3.0);
  CHECK(std::abs(m - 1.0 / std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(arg - std::asinh(1.0)) < 1e-3);
}
