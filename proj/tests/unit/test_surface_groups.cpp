#include <algorithm>
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include "../oracle/brute_ball.hpp"
#include "../support/random.hpp"
#include "fsimple/curves.hpp"
#include "fsimple/enumeration.hpp"
#include "fsimple/errors.hpp"
#include "fsimple/surface_group.hpp"

using namespace fsimple;

namespace {

std::vector<SurfaceGroup> fn_grid() {
  testgen::Rng rng(77);
  std::vector<SurfaceGroup> out;
  for (int i = 0; i < 10; ++i) {
    const double l1 = testgen::uniform(rng, 0.2, 3.0), l2 = testgen::uniform(rng, 0.2, 3.0),
                 l3 = testgen::uniform(rng, 0.2, 3.0);
    const double t1 = testgen::uniform(rng, -1.0, 1.0), t2 = testgen::uniform(rng, -1.0, 1.0),
                 t3 = testgen::uniform(rng, -1.0, 1.0);
    out.push_back(fenchel_nielsen_group(l1, l2, l3, t1, t2, t3));
  }
  return out;
}

double fn_curve_length(const SurfaceGroup& G, int k) {
  return translation_length(evaluate(G, G.gluing_curves[static_cast<std::size_t>(k)]));
}

}  // namespace

TEST_CASE("octagon group: relator, volume, generators") {
  const SurfaceGroup O = octagon_group();
  CHECK(O.genus == 2);
  CHECK(O.num_generators() == 4);
  CHECK(relator_defect(O) <= 1e-7);
  CHECK(O.relator == Word::parse("abABcdCD"));
  CHECK(std::abs(O.volume - 4.0 * std::numbers::pi) <= 1e-9);
  CHECK(std::abs(O.volume - 12.56637) < 1e-5);
  // Gauss-Bonnet for the octagon with angles pi/4.
  CHECK(std::abs(6.0 * std::numbers::pi - 8.0 * std::numbers::pi / 4.0 - O.volume) < 1e-12);
  const double sys = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
  for (const Isometry& g : O.generators) {
    CHECK(classify(g) == IsometryKind::hyperbolic);
    CHECK(std::abs(translation_length(g) - sys) < 1e-9);
  }
  CHECK_NOTHROW(verify_group(O));
}

TEST_CASE("Fenchel-Nielsen groups over a parameter grid") {
  for (const SurfaceGroup& G : fn_grid()) {
    CHECK(relator_defect(G) <= 1e-7);
    CHECK(std::abs(G.volume - 4.0 * std::numbers::pi) <= 1e-9);
    CHECK_NOTHROW(verify_group(G));
    REQUIRE(G.gluing_curves.size() == 3);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(fn_curve_length(G, k) - G.params[static_cast<std::size_t>(k)]) < 1e-6);
  }
}

TEST_CASE("Fenchel-Nielsen symmetric and degenerate inputs") {
  const SurfaceGroup G = fenchel_nielsen_group(0.5, 0.5, 0.5, 0, 0, 0);
  CHECK(std::abs(fn_curve_length(G, 0) - 0.5) < 1e-6);
  CHECK(std::abs(fn_curve_length(G, 0) - fn_curve_length(G, 1)) < 1e-9);
  CHECK(std::abs(fn_curve_length(G, 1) - fn_curve_length(G, 2)) < 1e-9);
  CHECK(G.relator == Word::parse("abdCBcAD"));
  CHECK_THROWS_AS(fenchel_nielsen_group(0.0, 1, 1, 0, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(fenchel_nielsen_group(1, -1, 1, 0, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(fenchel_nielsen_group(1, 1, NAN, 0, 0, 0), InvalidArgument);
  // The gluing curves are among the enumerated classes.
  std::set<ConjClass> classes;
  for (const ConjClass& c : conjugacy_classes(G, 2)) classes.insert(c);
  for (const Word& w : G.gluing_curves) CHECK(classes.count(ConjClass::of(w)) == 1);
}

TEST_CASE("evaluate examples") {
  const SurfaceGroup O = octagon_group();
  CHECK(evaluate(O, Word()).is_identity());
  CHECK(approx_equal(evaluate(O, Word::parse("c")), O.generators[2]));
  testgen::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Word w = testgen::word(rng, 4, 5);
    const Isometry g = evaluate(O, w);
    // Rounding in g g^-1 grows with the square of the entries.
    double big = 1.0;
    for (double x : g.entries()) big = std::max(big, std::abs(x));
    CHECK(compose(g, evaluate(O, w.inverse())).is_identity(1e-13 * big * big));
  }
  // Long words against an extended-precision product: displacement of i.
  for (int len : {12, 20, 30})
    for (int i = 0; i < 50; ++i) {
      const Word w = testgen::word(rng, 4, len);
      long double m[4] = {1, 0, 0, 1};
      for (Letter l : w.letters()) {
        Isometry h = O.generators[static_cast<std::size_t>(letter_gen(l))];
        if (letter_inverse(l)) h = h.inverse();
        const auto& e = h.entries();
        const long double n[4] = {m[0] * e[0] + m[1] * e[2], m[0] * e[1] + m[1] * e[3],
                                  m[2] * e[0] + m[3] * e[2], m[2] * e[1] + m[3] * e[3]};
        std::copy(n, n + 4, m);
      }
      const long double ref = std::acosh(0.5L * (m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3]));
      const Isometry g = evaluate(O, w);
      CHECK(std::abs(static_cast<double>(ref) - hyperbolic_distance(Point(0.0, 1.0), g.apply(Point(0.0, 1.0)))) < 1e-9);
    }
  CHECK_THROWS_AS(evaluate(O, Word::parse("e")), InvalidArgument);
}

TEST_CASE("enumerate_ball sizes and nesting") {
  const SurfaceGroup O = octagon_group();
  BallOptions opt;
  opt.use_cache = false;
  const std::vector<std::size_t> expected{1, 9, 65, 457, 3193};
  std::vector<std::vector<BallElement>> balls;
  for (int r = 0; r <= 4; ++r) {
    balls.push_back(enumerate_ball(O, r, opt));
    CHECK(balls.back().size() == expected[static_cast<std::size_t>(r)]);
  }
  CHECK(balls[0][0].word.empty());
  for (int r = 0; r < 4; ++r) {
    IsometryIndex next;
    for (const auto& e : balls[static_cast<std::size_t>(r) + 1]) next.find_or_insert(e.iso);
    for (const auto& e : balls[static_cast<std::size_t>(r)]) CHECK(next.find(e.iso).has_value());
  }
  for (std::size_t i = 1; i < balls[4].size(); ++i) CHECK(balls[4][i - 1].word < balls[4][i].word);
  CHECK_THROWS_AS(enumerate_ball(O, -1, opt), InvalidArgument);
}

TEST_CASE("enumerate_ball matches the brute-force oracle") {
  for (const SurfaceGroup& G : {octagon_group(), fenchel_nielsen_group(0.5, 0.5, 0.5, 0, 0, 0),
                               fenchel_nielsen_group(1.3, 0.7, 2.1, 0.2, -0.4, 0.9)}) {
    const auto brute = oracle::brute_ball_sizes(G, 4);
    BallOptions opt;
    opt.use_cache = false;
    for (int r = 0; r <= 4; ++r)
      CHECK(enumerate_ball(G, r, opt).size() == brute[static_cast<std::size_t>(r)]);
  }
}

TEST_CASE("enumerate_ball is independent of worker count") {
  const SurfaceGroup G = fenchel_nielsen_group(0.9, 1.1, 1.4, 0.1, 0.2, 0.3);
  BallOptions one, many;
  one.use_cache = many.use_cache = false;
  many.workers = 3;
  const auto a = enumerate_ball(G, 5, one), b = enumerate_ball(G, 5, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].word == b[i].word);
    CHECK(a[i].iso.entries() == b[i].iso.entries());
  }
}

TEST_CASE("ball cache hits are bit-identical and bad caches are ignored") {
  const auto dir = std::filesystem::temp_directory_path() / "fsimple_ball_cache_test";
  std::filesystem::remove_all(dir);
  const SurfaceGroup O = octagon_group();
  BallOptions opt;
  opt.cache_dir = dir;
  const auto cold = enumerate_ball(O, 4, opt);
  const auto file = dir / ball_cache_name(O, 4, opt.tol);
  REQUIRE(std::filesystem::exists(file));
  const auto warm = enumerate_ball(O, 4, opt);
  REQUIRE(cold.size() == warm.size());
  for (std::size_t i = 0; i < cold.size(); ++i) {
    CHECK(cold[i].word == warm[i].word);
    CHECK(cold[i].iso.entries() == warm[i].iso.entries());
  }
  // A corrupted file is replaced by recomputation.
  {
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    f << "garbage";
  }
  const auto again = enumerate_ball(O, 4, opt);
  CHECK(again.size() == cold.size());
  CHECK(ball_cache_name(O, 4, opt.tol) != ball_cache_name(O, 5, opt.tol));
  std::filesystem::remove_all(dir);
}

TEST_CASE("conjugacy_classes examples") {
  const SurfaceGroup O = octagon_group();
  const auto classes = conjugacy_classes(O, 4);
  std::set<ConjClass> set(classes.begin(), classes.end());
  CHECK(set.size() == classes.size());
  CHECK(set.count(ConjClass::of(Word::parse("ab"))) == 1);
  CHECK(ConjClass::of(Word::parse("ba")) == ConjClass::of(Word::parse("ab")));
  bool found_power = false;
  for (const ConjClass& c : classes)
    if (c.canonical == ConjClass::of(Word::parse("abab")).canonical) {
      found_power = true;
      CHECK_FALSE(c.primitive);
    }
  CHECK(found_power);
  CHECK_THROWS_AS(conjugacy_classes(O, 0), InvalidArgument);
}

TEST_CASE("property: class length is a conjugacy invariant") {
  const SurfaceGroup O = octagon_group();
  testgen::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Word w = testgen::cyclic_word(rng, 4, testgen::uniform_int(rng, 1, 8));
    const Isometry g = evaluate(O, w);
    if (std::abs(g.trace()) <= 2.0 + 1e-6) continue;
    const double l = translation_length(g);
    const Word u = testgen::word(rng, 4, testgen::uniform_int(rng, 0, 2));
    CHECK(std::abs(translation_length(evaluate(O, ConjClass::of(w).canonical)) - l) < 1e-9 * std::max(1.0, l));
    CHECK(std::abs(word_length(O, u * w * u.inverse()) - l) < 1e-9 * std::max(1.0, l));
  }
}
