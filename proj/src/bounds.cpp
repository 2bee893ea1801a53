#include "fsimple/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "fsimple/errors.hpp"
#include "fsimple/format.hpp"

namespace fsimple {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument(std::string(name) + " must be positive and finite");
}

}  // namespace

PsDim ps_dim_from_lambda0(double lambda0) {
  if (!(lambda0 >= 0.0) || !std::isfinite(lambda0)) throw InvalidArgument("lambda0 must be non-negative");
  if (lambda0 < 0.25) return {0.5 + std::sqrt(0.25 - lambda0), true};
  return {0.5, false};
}

double lambda0_from_dim(double delta) {
  if (!(delta >= 0.5 && delta <= 1.0)) throw InvalidArgument("dimension must lie in [1/2, 1]");
  return delta * (1.0 - delta);
}

double rayleigh_upper(double lEta, double vol) {
  require_positive(lEta, "curve length");
  require_positive(vol, "volume");
  return 2.0 * std::sinh(1.0) * lEta / vol;
}

double dim_lower_lambda(double lEta, double vol) {
  require_positive(lEta, "curve length");
  require_positive(vol, "volume");
  if (!(10.0 * lEta <= vol)) throw InvalidArgument("hypothesis 10l <= vol fails");
  return 0.5 + 0.5 * std::sqrt(1.0 - 10.0 * lEta / vol);
}

double cheeger_H_lower(double syst, double vol) {
  require_positive(syst, "systole");
  require_positive(vol, "volume");
  return 2.0 * syst / std::sqrt(vol * vol + 4.0 * syst * syst);
}

double dim_upper_lambda(double syst, double vol) {
  require_positive(syst, "systole");
  require_positive(vol, "volume");
  return 0.5 + 0.5 * std::sqrt(1.0 - 4.0 * syst * syst / (vol * vol + 4.0 * syst * syst));
}

DimXBounds dim_X_bounds(double syst, double vol) {
  require_positive(syst, "systole");
  require_positive(vol, "volume");
  DimXBounds b;
  b.upper = 2.0 + std::sqrt(1.0 - 4.0 * syst * syst / (vol * vol + 4.0 * syst * syst));
  if (10.0 * syst <= vol) b.lower = 2.0 + std::sqrt(1.0 - 10.0 * syst / vol);
  return b;
}

double hat_dim(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("dimension must lie in [0, 1]");
  return 1.0 + 2.0 * delta;
}

double cheeger_ratio_Br(double L, double V, double r) {
  require_positive(L, "boundary length");
  require_positive(V, "area");
  if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument("collar width must be non-negative");
  return std::cosh(r) * L / (V + std::sinh(r) * L);
}

GenusChecks genus_checks(int g) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  const double x = static_cast<double>(g);
  GenusChecks c;
  c.systUpper = 2.0 * std::acosh(2.0 * x - 1.0);
  c.monotoneValue = 20.0 * std::acosh(2.0 * x - 1.0) / (4.0 * std::numbers::pi * (x - 1.0));
  c.cond10Guaranteed = c.monotoneValue < 1.0;
  return c;
}

BoundReport report(const SurfaceGroup& G, const SystoleResult& syst,
                   const std::optional<DimensionEstimate>& eta) {
  if (!syst.stable) throw ComputationError("uncertified systole: raise the word radius");
  BoundReport r;
  r.surface = G.key();
  r.syst = syst.length;
  r.vol = G.volume;
  r.regime10 = 10.0 * r.syst <= r.vol;
  r.rayleighUpper = rayleigh_upper(r.syst, r.vol);
  r.cheegerHLower = cheeger_H_lower(r.syst, r.vol);
  r.dimUpperLambda = dim_upper_lambda(r.syst, r.vol);
  if (r.regime10) r.dimLowerLambda = dim_lower_lambda(r.syst, r.vol);
  const DimXBounds x = dim_X_bounds(r.syst, r.vol);
  r.dimXUpper = x.upper;
  r.dimXLower = x.lower;
  if (eta) {
    r.estimate = eta->value;
    r.hatDim = hat_dim(eta->value);
    r.hatDimSource = "estimate";
  } else {
    r.hatDim = hat_dim(r.dimUpperLambda);
    r.hatDimSource = "upper-bound";
  }
  r.tenThirdsHolds = 10.0 / 3.0 * r.syst <= r.vol;
  if (!r.tenThirdsHolds) r.warnings.push_back("(10/3) syst <= vol violated by the numerics");
  if (r.dimLowerLambda && *r.dimLowerLambda > r.dimUpperLambda)
    r.warnings.push_back("limit-set lower bound exceeds upper bound");
  if (r.dimXLower && *r.dimXLower > r.dimXUpper) r.warnings.push_back("dim X lower bound exceeds upper bound");
  return r;
}

std::string report_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  const auto opt = [](const std::optional<double>& v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  j["schemaVersion"] = kReportSchemaVersion;
  j["surface"] = r.surface;
  j["syst"] = r.syst;
  j["vol"] = r.vol;
  j["regime10"] = r.regime10;
  j["rayleighUpper"] = r.rayleighUpper;
  j["cheegerHLower"] = r.cheegerHLower;
  j["dimUpperLambda"] = r.dimUpperLambda;
  j["dimLowerLambda"] = opt(r.dimLowerLambda);
  j["dimXUpper"] = r.dimXUpper;
  j["dimXLower"] = opt(r.dimXLower);
  j["hatDim"] = r.hatDim;
  j["hatDimSource"] = r.hatDimSource;
  j["estimate"] = opt(r.estimate);
  j["tenThirdsHolds"] = r.tenThirdsHolds;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string report_table(const BoundReport& r) {
  std::ostringstream os;
  const auto row = [&](const std::string& k, const std::string& v) {
    os << k << std::string(k.size() < 18 ? 18 - k.size() : 1, ' ') << v << "\n";
  };
  const auto num = [](double x) { return fmt_fixed(x, 6); };
  const auto opt = [&](const std::optional<double>& v) { return v ? num(*v) : std::string("n/a"); };
  row("surface", r.surface);
  row("systole", num(r.syst));
  row("volume", num(r.vol));
  row("regime 10l<=vol", r.regime10 ? "yes" : "no");
  row("rayleigh upper", num(r.rayleighUpper));
  row("cheeger H lower", num(r.cheegerHLower));
  row("dim Lambda lower", opt(r.dimLowerLambda));
  row("dim Lambda upper", num(r.dimUpperLambda));
  row("dim X lower", opt(r.dimXLower));
  row("dim X upper", num(r.dimXUpper));
  row("estimate", opt(r.estimate));
  row("hat dim", num(r.hatDim) + " (" + r.hatDimSource + ")");
  for (const auto& w : r.warnings) row("warning", w);
  return os.str();
}

}  // namespace fsimple
