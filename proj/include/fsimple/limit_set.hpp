#pragma once

// Subgroups of surface groups: the cut-surface group of a simple closed
// geodesic, orbit growth, critical exponent and limit-set dimension.

#include <string>
#include <vector>

#include "fsimple/curves.hpp"

namespace fsimple {

// Subgroup of host generated by words in the host letters.
struct Subgroup {
  SurfaceGroup host;
  std::vector<Word> gens;
  bool free = false;  // no relation among gens up to the verification radius
  std::string label;
};

// Checks freeness by matrix dedup of the subgroup ball of the given radius.
Subgroup make_subgroup(const SurfaceGroup& host, std::vector<Word> gens, std::string label,
                       int freeCheckRadius = 4);

// Nielsen moves g_i -> g_i g_j^{+-1} or g_j^{+-1} g_i applied while they
// shorten the basepoint displacement of g_i. Same subgroup, shorter basis.
std::vector<Word> nielsen_reduce(const SurfaceGroup& host, std::vector<Word> gens);

// Whole surface group as a subgroup of itself.
Subgroup full_subgroup(const SurfaceGroup& host);

struct CutSubgroup {
  Subgroup group;
  ConjClass eta;
  double etaLength = 0.0;
  double boundaryLength = 0.0;  // 2 l(eta)
  double coreVolume = 0.0;      // vol(host)
  int verifiedRadius = 0;
};

inline constexpr int kCutVerifyRadius = 6;

// Built-in catalogue: the octagon and Fenchel-Nielsen surfaces cut along "a".
// Construction verifies hyperbolic generators, freeness, and zero certified
// intersection with eta for every subgroup class up to verifyRadius.
CutSubgroup cut_subgroup(const SurfaceGroup& G, const ConjClass& eta,
                         int verifyRadius = kCutVerifyRadius, const CrossingOptions& opt = {});

struct GrowthRow {
  double R = 0.0;
  long long N = 0;
};

struct GrowthOptions {
  int workers = 1;
  BallOptions ball;  // used for non-free subgroups
  // Words moving the basepoint further than rMax + pruneMargin are not
  // extended. Reduced words are quasi-geodesics, so a margin above the
  // backtracking constant loses nothing; tests check stability in it.
  double pruneMargin = 4.0;
};

// N(R) for R = 0, 1, ..., floor(rMax): subgroup elements of word length
// <= wordRadius (in the subgroup generators) moving the basepoint by <= R.
// Throws ComputationError("growth table truncated") when some word of
// length exactly wordRadius survives pruning.
std::vector<GrowthRow> orbit_growth(const Subgroup& S, double rMax, int wordRadius,
                                    const GrowthOptions& opt = {});

enum class DimensionMethod { orbitGrowth, boxCounting };

struct DimensionEstimate {
  DimensionMethod method = DimensionMethod::orbitGrowth;
  double value = 0.0;
  double rawSlope = 0.0;
  double residual = 0.0;
  bool clamped = false;
  std::vector<double> params;  // fit window or scales
};

// Least-squares slope of log N(R) against R over the rows with
// R >= windowStart * R_last (the tail half by default).
DimensionEstimate critical_exponent(const std::vector<GrowthRow>& table, double windowStart = 0.5);

// Attracting fixed points of the hyperbolic subgroup elements of word
// length <= wordRadius, deduplicated at 1e-9 in disk angle, in circular order.
std::vector<BoundaryPoint> limit_set_sample(const Subgroup& S, int wordRadius, int workers = 1);

// Slope of log(occupied arcs of width s) against log(1/s).
DimensionEstimate box_dimension(const std::vector<BoundaryPoint>& points,
                                const std::vector<double>& scales);

// Geometric scales from hi down to lo.
std::vector<double> geometric_scales(double hi, double lo, int count);

}  // namespace fsimple
