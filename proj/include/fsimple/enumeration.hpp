#pragma once

// Balls in the Cayley graph of a surface group, one entry per group element.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsimple/surface_group.hpp"
#include "fsimple/tolerance_set.hpp"

namespace fsimple {

inline constexpr double kMatrixTol = 1e-7;

struct BallElement {
  Word word;  // shortlex-least word of length <= radius for the element
  Isometry iso;
};

struct BallOptions {
  int workers = 1;
  double tol = kMatrixTol;
  // Cache root; when unset, FSIMPLE_CACHE_DIR is consulted, and caching is
  // off if that is unset too.
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
};

// Elements sorted shortlex by representative word. Elements equal up to sign
// within tol are merged; a near miss throws Uncertain("increase precision").
std::vector<BallElement> enumerate_ball(const SurfaceGroup& G, int radius,
                                        const BallOptions& opt = {});

// Canonical class words of length <= radius (word level: rotation and
// inversion only; relator-equivalent words stay distinct).
std::vector<ConjClass> conjugacy_classes(const SurfaceGroup& G, int radius);

// Cache file name for the given group, radius and tolerance.
std::string ball_cache_name(const SurfaceGroup& G, int radius, double tol);

// Set of isometries compared entrywise up to global sign.
class IsometryIndex {
 public:
  explicit IsometryIndex(double tol = kMatrixTol) : set_(tol) {}
  std::optional<std::size_t> find(const Isometry& g) const;
  std::pair<std::size_t, bool> find_or_insert(const Isometry& g);
  std::size_t size() const noexcept { return set_.size(); }
  void reserve(std::size_t n) { set_.reserve(n); }

 private:
  ToleranceSet<4> set_;
};

}  // namespace fsimple
