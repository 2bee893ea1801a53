#pragma once

// Approximate-membership set for points of R^N under the max-norm.
//
// Points closer than `tol` are the same. A lookup that finds a stored point at
// distance in (tol, 10*tol] cannot tell "same" from "different" and throws
// Uncertain("increase precision"). Buckets are 100*tol wide, so a query only
// needs neighbouring buckets along coordinates that sit near a bucket edge.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsimple/errors.hpp"

namespace fsimple {

template <std::size_t N>
class ToleranceSet {
 public:
  using Key = std::array<double, N>;

  explicit ToleranceSet(double tol) : tol_(tol), width_(100.0 * tol) {}

  // Index of the stored point equal to p, if any.
  std::optional<std::size_t> find(const Key& p) const {
    std::optional<std::size_t> hit;
    for_each_bucket(p, [&](const Cell& cell) {
      auto it = map_.find(cell);
      if (it == map_.end()) return;
      for (std::size_t idx : it->second) {
        const double d = dist(points_[idx], p);
        if (d <= tol_) {
          if (!hit || idx < *hit) hit = idx;
        } else if (d <= 10.0 * tol_) {
          throw Uncertain("increase precision: two points within the ambiguity band");
        }
      }
    });
    return hit;
  }

  // Stores p and returns its index; does not check for duplicates.
  std::size_t insert(const Key& p) {
    const std::size_t idx = points_.size();
    points_.push_back(p);
    map_[cell_of(p)].push_back(idx);
    return idx;
  }

  // find() or insert(); the bool is true when p was new.
  std::pair<std::size_t, bool> find_or_insert(const Key& p) {
    if (auto f = find(p)) return {*f, false};
    return {insert(p), true};
  }

  std::size_t size() const noexcept { return points_.size(); }
  const Key& operator[](std::size_t i) const { return points_[i]; }
  void reserve(std::size_t n) {
    points_.reserve(n);
    map_.reserve(n);
  }

 private:
  using Cell = std::array<std::int64_t, N>;
  struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
      std::uint64_t h = 1469598103934665603ull;
      for (std::int64_t v : c) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

  static double dist(const Key& a, const Key& b) noexcept {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
  }

  Cell cell_of(const Key& p) const noexcept {
    Cell c;
    for (std::size_t i = 0; i < N; ++i) c[i] = static_cast<std::int64_t>(std::floor(p[i] / width_));
    return c;
  }

  template <class F>
  void for_each_bucket(const Key& p, F&& f) const {
    const double reach = 10.0 * tol_;
    Cell base = cell_of(p);
    std::array<int, N> lo{}, hi{};
    for (std::size_t i = 0; i < N; ++i) {
      const double x = p[i] / width_ - static_cast<double>(base[i]);
      lo[i] = (x * width_ <= reach) ? -1 : 0;
      hi[i] = ((1.0 - x) * width_ <= reach) ? 1 : 0;
    }
    Cell c = base;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == N) {
        f(c);
        return;
      }
      for (int o = lo[i]; o <= hi[i]; ++o) {
        c[i] = base[i] + o;
        self(self, i + 1);
      }
      c[i] = base[i];
    };
    rec(rec, 0);
  }

  double tol_;
  double width_;
  std::vector<Key> points_;
  std::unordered_map<Cell, std::vector<std::size_t>, CellHash> map_;
};

}  // namespace fsimple
