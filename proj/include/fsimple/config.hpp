#pragma once

// Run configuration: a flat "key = value" text file, overridable by flags.
//
//   surface = fn
//   fn = 0.5,0.5,0.5,0,0,0 hyp
//   rmax = 14 hyp
//
// Length-valued keys accept an optional "hyp" unit suffix; the normalized
// form always writes it.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fsimple/curves.hpp"

namespace fsimple {

struct RunConfig {
  std::string surface = "octagon";  // octagon | fn
  std::array<double, 6> fn{1.0, 1.0, 1.0, 0.0, 0.0, 0.0};
  int wordRadius = 4;
  int searchRadius = kDefaultSearchRadius;
  int systoleRadius = 8;
  double rMax = 14.0;
  double pruneMargin = 4.0;
  int sampleRadius = 9;
  std::string filter = "constant:0";
  std::string schedule = "exp:2";
  std::string curve = "a";
  std::string subgroup = "cut";  // cut | cyclic | full
  std::vector<double> sweep;     // census: tau values for the N(L, tau) table
  std::string out;               // output directory; empty means stdout
  std::string format;            // csv | json | svg | text; empty means command default
  int workers = 1;
  std::string cacheDir;
  bool deterministic = true;  // always on

  // Throws ConfigError naming the offending field.
  void validate() const;
  std::string normalized() const;
};

// Applies "key = value" lines to cfg. Blank lines and '#' comments are skipped.
void apply_config_text(RunConfig& cfg, const std::string& text);

// Applies a single key/value pair (flag overrides use the same path).
void apply_config_value(RunConfig& cfg, const std::string& key, const std::string& value);

RunConfig parse_config(const std::string& text);

SurfaceGroup build_surface(const RunConfig& cfg);

}  // namespace fsimple
