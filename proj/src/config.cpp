#include "fsimple/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "fsimple/errors.hpp"
#include "fsimple/format.hpp"

namespace fsimple {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_unit(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  if (v.size() > 3 && v.compare(v.size() - 3, 3, "hyp") == 0) v = trim(v.substr(0, v.size() - 3));
  if (v.empty()) throw ConfigError(key, "missing value");
  return v;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    const double x = parse_double(trim(v));
    if (!std::isfinite(x)) throw ConfigError(key, "value must be finite");
    return x;
  } catch (const InvalidArgument&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  int x = 0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), x);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || t.empty())
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  return x;
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(to_double(key, item));
  return out;
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + fmt_double(xs[i]);
  return s;
}

}  // namespace

void apply_config_value(RunConfig& cfg, const std::string& rawKey, const std::string& value) {
  std::string key = trim(rawKey);
  for (char& c : key)
    if (c == '-') c = '_';
  const std::string v = trim(value);
  if (key == "surface") {
    cfg.surface = v;
  } else if (key == "fn") {
    const auto xs = to_list(key, strip_unit(key, v));
    if (xs.size() != 6) throw ConfigError(key, "expected 6 comma-separated values l1,l2,l3,t1,t2,t3");
    for (int i = 0; i < 6; ++i) cfg.fn[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(i)];
    cfg.surface = "fn";
  } else if (key == "word_radius") {
    cfg.wordRadius = to_int(key, v);
  } else if (key == "search_radius") {
    cfg.searchRadius = to_int(key, v);
  } else if (key == "systole_radius") {
    cfg.systoleRadius = to_int(key, v);
  } else if (key == "rmax") {
    cfg.rMax = to_double(key, strip_unit(key, v));
  } else if (key == "prune_margin") {
    cfg.pruneMargin = to_double(key, strip_unit(key, v));
  } else if (key == "sample_radius") {
    cfg.sampleRadius = to_int(key, v);
  } else if (key == "filter") {
    cfg.filter = v;
  } else if (key == "schedule") {
    cfg.schedule = v;
  } else if (key == "curve") {
    cfg.curve = v;
  } else if (key == "subgroup") {
    cfg.subgroup = v;
  } else if (key == "sweep") {
    cfg.sweep = v.empty() ? std::vector<double>{} : to_list(key, v);
  } else if (key == "out") {
    cfg.out = v;
  } else if (key == "format") {
    cfg.format = v;
  } else if (key == "workers") {
    cfg.workers = to_int(key, v);
  } else if (key == "cache_dir") {
    cfg.cacheDir = v;
  } else if (key == "deterministic") {
    if (v != "true") throw ConfigError(key, "determinism cannot be switched off");
  } else {
    throw ConfigError(key, "unknown configuration key");
  }
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  int line_no = 0;
  for (std::string line; std::getline(ss, line);) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    apply_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  apply_config_text(cfg, text);
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  if (surface != "octagon" && surface != "fn") throw ConfigError("surface", "expected 'octagon' or 'fn'");
  if (surface == "fn")
    for (int i = 0; i < 3; ++i)
      if (!(fn[static_cast<std::size_t>(i)] > 0.0)) throw ConfigError("fn", "lengths must be positive");
  if (wordRadius < 1 || wordRadius > 12) throw ConfigError("word_radius", "expected 1..12");
  if (searchRadius < 0 || searchRadius > 6) throw ConfigError("search_radius", "expected 0..6");
  if (systoleRadius < 2 || systoleRadius > 10) throw ConfigError("systole_radius", "expected 2..10");
  if (!(rMax > 0.0 && rMax <= 40.0)) throw ConfigError("rmax", "expected 0 < rmax <= 40");
  if (!(pruneMargin >= 0.0 && pruneMargin <= 20.0)) throw ConfigError("prune_margin", "expected 0..20");
  if (sampleRadius < 2 || sampleRadius > 12) throw ConfigError("sample_radius", "expected 2..12");
  try {
    FilterSpec::parse(filter);
  } catch (const InvalidArgument& e) {
    throw ConfigError("filter", e.what());
  }
  try {
    Schedule::parse(schedule);
  } catch (const InvalidArgument& e) {
    throw ConfigError("schedule", e.what());
  }
  try {
    if (Word::parse(curve).empty()) throw ConfigError("curve", "empty word");
  } catch (const InvalidArgument& e) {
    throw ConfigError("curve", e.what());
  }
  if (subgroup != "cut" && subgroup != "cyclic" && subgroup != "full")
    throw ConfigError("subgroup", "expected 'cut', 'cyclic' or 'full'");
  for (double t : sweep)
    if (!(t > 0.0)) throw ConfigError("sweep", "tau values must be positive");
  if (!format.empty() && format != "csv" && format != "json" && format != "svg" && format != "text")
    throw ConfigError("format", "expected csv, json, svg or text");
  if (workers < 1 || workers > 256) throw ConfigError("workers", "expected 1..256");
}

std::string RunConfig::normalized() const {
  std::ostringstream os;
  os << "surface = " << surface << "\n";
  if (surface == "fn") os << "fn = " << join({fn.begin(), fn.end()}) << " hyp\n";
  os << "word_radius = " << wordRadius << "\n";
  os << "search_radius = " << searchRadius << "\n";
  os << "systole_radius = " << systoleRadius << "\n";
  os << "rmax = " << fmt_double(rMax) << " hyp\n";
  os << "prune_margin = " << fmt_double(pruneMargin) << " hyp\n";
  os << "sample_radius = " << sampleRadius << "\n";
  os << "filter = " << FilterSpec::parse(filter).str() << "\n";
  os << "schedule = " << Schedule::parse(schedule).str() << "\n";
  os << "curve = " << curve << "\n";
  os << "subgroup = " << subgroup << "\n";
  os << "sweep = " << join(sweep) << "\n";
  os << "out = " << out << "\n";
  os << "format = " << format << "\n";
  os << "workers = " << workers << "\n";
  os << "cache_dir = " << cacheDir << "\n";
  os << "deterministic = true\n";
  return os.str();
}

SurfaceGroup build_surface(const RunConfig& cfg) {
  if (cfg.surface == "octagon") return octagon_group();
  return fenchel_nielsen_group(cfg.fn[0], cfg.fn[1], cfg.fn[2], cfg.fn[3], cfg.fn[4], cfg.fn[5]);
}

}  // namespace fsimple
