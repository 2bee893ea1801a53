#pragma once

// Closed-form spectral, Cheeger and dimension bounds, and the per-surface
// report assembled from them.

#include <optional>
#include <string>
#include <vector>

#include "fsimple/curves.hpp"
#include "fsimple/limit_set.hpp"

namespace fsimple {

struct PsDim {
  double dim = 0.5;
  bool informative = false;
};

// 1/2 + sqrt(1/4 - lambda0) below the spectral threshold 1/4, else 1/2.
PsDim ps_dim_from_lambda0(double lambda0);

// delta (1 - delta) for delta in [1/2, 1].
double lambda0_from_dim(double delta);

// 2 sinh(1) lEta / vol.
double rayleigh_upper(double lEta, double vol);

// 1/2 + sqrt(1 - 10 lEta / vol) / 2; requires 10 lEta <= vol.
double dim_lower_lambda(double lEta, double vol);

// 2 syst / sqrt(vol^2 + 4 syst^2).
double cheeger_H_lower(double syst, double vol);

// 1/2 + sqrt(1 - 4 syst^2 / (vol^2 + 4 syst^2)) / 2.
double dim_upper_lambda(double syst, double vol);

struct DimXBounds {
  std::optional<double> lower;  // present iff 10 syst <= vol
  double upper = 0.0;
};

DimXBounds dim_X_bounds(double syst, double vol);

// 1 + 2 delta.
double hat_dim(double delta);

// cosh(r) L / (V + sinh(r) L).
double cheeger_ratio_Br(double L, double V, double r);

struct GenusChecks {
  double systUpper = 0.0;
  bool cond10Guaranteed = false;
  double monotoneValue = 0.0;
};

GenusChecks genus_checks(int g);

inline constexpr int kReportSchemaVersion = 1;

struct BoundReport {
  std::string surface;
  double syst = 0.0;
  double vol = 0.0;
  bool regime10 = false;
  double rayleighUpper = 0.0;
  double cheegerHLower = 0.0;
  double dimUpperLambda = 0.0;
  std::optional<double> dimLowerLambda;
  double dimXUpper = 0.0;
  std::optional<double> dimXLower;
  double hatDim = 0.0;
  std::string hatDimSource;  // "estimate" or "upper-bound"
  std::optional<double> estimate;
  bool tenThirdsHolds = true;
  std::vector<std::string> warnings;
};

// Requires a stable systole. With an estimate of the cut-subgroup dimension,
// hatDim uses it; otherwise the upper bound.
BoundReport report(const SurfaceGroup& G, const SystoleResult& syst,
                   const std::optional<DimensionEstimate>& eta = std::nullopt);

// JSON with a fixed field order.
std::string report_json(const BoundReport& r);

// Aligned two-column text table.
std::string report_table(const BoundReport& r);

}  // namespace fsimple
