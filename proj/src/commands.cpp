#include "fsimple/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fsimple/bounds.hpp"
#include "fsimple/errors.hpp"
#include "fsimple/format.hpp"
#include "fsimple/limit_set.hpp"
#include "fsimple/svg.hpp"

namespace fsimple {

namespace {

using Json = nlohmann::ordered_json;

CrossingOptions crossing_options(const RunConfig& cfg) {
  CrossingOptions o;
  o.workers = cfg.workers;
  o.ball.workers = cfg.workers;
  if (!cfg.cacheDir.empty()) o.ball.cache_dir = cfg.cacheDir;
  return o;
}

std::string format_or(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void unsupported_format(const RunConfig& cfg, const char* command) {
  throw ConfigError("format", "'" + cfg.format + "' is not available for " + command);
}

Json report_to_json(const BoundReport& r) { return Json::parse(report_json(r)); }

Json estimate_json(const DimensionEstimate& e) {
  Json j;
  j["method"] = e.method == DimensionMethod::orbitGrowth ? "orbit-growth" : "box-counting";
  j["value"] = e.value;
  j["rawSlope"] = e.rawSlope;
  j["residual"] = e.residual;
  j["clamped"] = e.clamped;
  j["params"] = e.params;
  return j;
}

// Vertices of the Dirichlet octagon at the basepoint: halfway in angle
// between the directions of the eight nearest orbit points.
std::vector<std::complex<double>> octagon_vertices(const SurfaceGroup& G) {
  std::vector<double> angles;
  double best = INFINITY;
  std::vector<std::pair<double, double>> cand;
  for (const BallElement& el : enumerate_ball(G, 2)) {
    if (el.word.empty()) continue;
    const Point p = el.iso.apply(G.basepoint);
    const double d = hyperbolic_distance(G.basepoint, p);
    best = std::min(best, d);
    cand.push_back({d, std::arg(to_disk(p))});
  }
  for (const auto& [d, a] : cand)
    if (d <= best + 1e-6) angles.push_back(a);
  std::sort(angles.begin(), angles.end());
  if (angles.size() != 8) return {};
  const double rc = std::acosh(std::pow(1.0 / std::tan(std::numbers::pi / 8.0), 2));
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < 8; ++i) {
    double a = angles[i], b = angles[(i + 1) % 8];
    if (b < a) b += 2.0 * std::numbers::pi;
    out.push_back(std::polar(std::tanh(rc / 2.0), (a + b) / 2.0));
  }
  return out;
}

std::string growth_csv(const std::vector<GrowthRow>& rows) {
  std::ostringstream os;
  os << "R,N\n";
  for (const GrowthRow& r : rows) os << fmt_double(r.R) << "," << r.N << "\n";
  return os.str();
}

std::string sample_csv(const std::vector<BoundaryPoint>& pts) {
  std::ostringstream os;
  os << "angle,x\n";
  for (const BoundaryPoint& p : pts)
    os << fmt_fixed(p.disk_angle(), 12) << "," << (p.is_infinite() ? std::string("inf") : fmt_double(p.value()))
       << "\n";
  return os.str();
}

}  // namespace

CommandOutput cmd_build(const RunConfig& cfg) {
  cfg.validate();
  const SurfaceGroup G = build_surface(cfg);
  Json j;
  j["schemaVersion"] = 1;
  j["surface"] = G.key();
  j["label"] = G.label;
  j["genus"] = G.genus;
  j["volume"] = G.volume;
  j["relator"] = G.relator.str();
  j["relatorDefect"] = relator_defect(G);
  Json gens = Json::array();
  for (int k = 0; k < G.num_generators(); ++k) {
    const Isometry& g = G.generators[static_cast<std::size_t>(k)];
    Json e;
    e["word"] = Word::generator(k).str();
    e["trace"] = g.trace();
    e["length"] = translation_length(g);
    gens.push_back(e);
  }
  j["generators"] = gens;
  Json glue = Json::array();
  for (const Word& w : G.gluing_curves) {
    Json e;
    e["word"] = w.str();
    e["length"] = translation_length(evaluate(G, w));
    glue.push_back(e);
  }
  j["gluingCurves"] = glue;
  const std::string fmt = format_or(cfg, "json");
  if (fmt != "json") unsupported_format(cfg, "build");
  CommandOutput out;
  out.primary = j.dump(2) + "\n";
  out.files.push_back({"build.json", out.primary});
  return out;
}

CommandOutput cmd_census(const RunConfig& cfg) {
  cfg.validate();
  const SurfaceGroup G = build_surface(cfg);
  const FilterSpec f = FilterSpec::parse(cfg.filter);
  const auto records = census(G, cfg.wordRadius, cfg.searchRadius, crossing_options(cfg));
  const auto kept = f_simple_filter(records, f);
  std::set<ConjClass> flagged;
  for (const auto& r : kept) flagged.insert(r.cls);

  std::ostringstream csv;
  csv << "word,length,selfInt,certified,searchRadius,fsimple\n";
  Json rows = Json::array();
  for (const auto& r : records) {
    const bool fs = flagged.count(r.cls) > 0;
    csv << r.cls.canonical.str() << "," << fmt_fixed(r.length, 12) << "," << r.selfInt << ","
        << (r.certified ? "true" : "false") << "," << r.searchRadius << "," << (fs ? "true" : "false") << "\n";
    Json e;
    e["word"] = r.cls.canonical.str();
    e["length"] = r.length;
    e["selfInt"] = r.selfInt;
    e["certified"] = r.certified;
    e["searchRadius"] = r.searchRadius;
    e["fsimple"] = fs;
    rows.push_back(e);
  }
  Json j;
  j["schemaVersion"] = 1;
  j["surface"] = G.key();
  j["filter"] = f.str();
  j["wordRadius"] = cfg.wordRadius;
  j["records"] = rows;

  // N(L, tau): linear-filter counts among records of length <= L.
  std::string sweep;
  if (!cfg.sweep.empty()) {
    std::ostringstream os;
    os << "L";
    for (double t : cfg.sweep) os << ",tau=" << fmt_double(t);
    os << "\n";
    const double maxLen = records.empty() ? 0.0 : records.back().length;
    for (int L = 1; L <= static_cast<int>(std::ceil(maxLen)); ++L) {
      os << L;
      for (double t : cfg.sweep) {
        FilterSpec lin;
        lin.kind = FilterKind::linear;
        lin.c = t;
        long long n = 0;
        for (const auto& r : f_simple_filter(records, lin))
          if (r.length <= L) ++n;
        os << "," << n;
      }
      os << "\n";
    }
    sweep = os.str();
  }

  CommandOutput out;
  const std::string fmt = format_or(cfg, "csv");
  if (fmt == "csv")
    out.primary = csv.str() + (sweep.empty() ? "" : "\n" + sweep);
  else if (fmt == "json")
    out.primary = j.dump(2) + "\n";
  else
    unsupported_format(cfg, "census");
  out.files.push_back({"census.csv", csv.str()});
  out.files.push_back({"census.json", j.dump(2) + "\n"});
  if (!sweep.empty()) out.files.push_back({"census_sweep.csv", sweep});
  return out;
}

CommandOutput cmd_dim(const RunConfig& cfg) {
  cfg.validate();
  const SurfaceGroup G = build_surface(cfg);
  const CrossingOptions copt = crossing_options(cfg);
  const ConjClass eta = ConjClass::of(Word::parse(cfg.curve));

  Subgroup S;
  Json sub;
  if (cfg.subgroup == "cut") {
    const CutSubgroup C = cut_subgroup(G, eta, kCutVerifyRadius, copt);
    S = C.group;
    sub["eta"] = C.eta.canonical.str();
    sub["etaLength"] = C.etaLength;
    sub["boundaryLength"] = C.boundaryLength;
    sub["coreVolume"] = C.coreVolume;
    sub["verifiedRadius"] = C.verifiedRadius;
  } else if (cfg.subgroup == "cyclic") {
    S = make_subgroup(G, {eta.canonical}, G.label + "-cyclic-" + eta.canonical.str());
  } else {
    S = full_subgroup(G);
  }
  sub["kind"] = cfg.subgroup;
  sub["label"] = S.label;
  Json gens = Json::array();
  for (const Word& w : S.gens) gens.push_back(w.str());
  sub["generators"] = gens;
  sub["free"] = S.free;

  GrowthOptions gopt;
  gopt.workers = cfg.workers;
  gopt.ball = copt.ball;
  gopt.pruneMargin = cfg.pruneMargin;
  // Pruning bounds the walk; the word radius only guards against runaway.
  const int growthRadius = 4096;
  const auto table = orbit_growth(S, cfg.rMax, growthRadius, gopt);
  const DimensionEstimate crit = critical_exponent(table);

  const auto sample = limit_set_sample(S, cfg.sampleRadius, cfg.workers);
  std::optional<DimensionEstimate> box;
  if (sample.size() >= 100) box = box_dimension(sample, geometric_scales(0.1, 1e-3, 6));

  const SystoleResult sys = systole(G, cfg.systoleRadius);
  const BoundReport rep = report(G, sys, crit);

  Json j;
  j["schemaVersion"] = 1;
  j["surface"] = G.key();
  j["subgroup"] = sub;
  Json growth;
  growth["rMax"] = cfg.rMax;
  growth["pruneMargin"] = cfg.pruneMargin;
  growth["basepoint"] = {G.basepoint.real(), G.basepoint.imag()};
  growth["rows"] = table.size();
  growth["finalN"] = table.back().N;
  j["growth"] = growth;
  j["criticalExponent"] = estimate_json(crit);
  j["sampleRadius"] = cfg.sampleRadius;
  j["samplePoints"] = sample.size();
  j["boxDimension"] = box ? estimate_json(*box) : Json(nullptr);
  j["boxMinusCritical"] = box ? Json(box->value - crit.value) : Json(nullptr);
  j["report"] = report_to_json(rep);

  DiskPicture pic;
  if (G.kind == SurfaceKind::octagon) pic.polygon = octagon_vertices(G);
  for (const Word& w : S.gens) pic.axes.push_back(axis(evaluate(G, w)));
  if (cfg.subgroup == "cut") pic.axes.push_back(axis(evaluate(G, eta.canonical)));
  pic.ticks = sample;
  pic.title = S.label;
  const std::string svg = render_svg(pic);

  CommandOutput out;
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json")
    out.primary = j.dump(2) + "\n";
  else if (fmt == "csv")
    out.primary = growth_csv(table);
  else if (fmt == "svg")
    out.primary = svg;
  else
    unsupported_format(cfg, "dim");
  out.files.push_back({"dim.json", j.dump(2) + "\n"});
  out.files.push_back({"growth.csv", growth_csv(table)});
  out.files.push_back({"sample.csv", sample_csv(sample)});
  out.files.push_back({"limit_set.svg", svg});
  return out;
}

CommandOutput cmd_report(const RunConfig& cfg) {
  cfg.validate();
  const SurfaceGroup G = build_surface(cfg);
  const SystoleResult sys = systole(G, cfg.systoleRadius);
  const BoundReport rep = report(G, sys);
  CommandOutput out;
  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json")
    out.primary = report_json(rep);
  else if (fmt == "text")
    out.primary = report_table(rep);
  else
    unsupported_format(cfg, "report");
  out.files.push_back({"report.json", report_json(rep)});
  out.files.push_back({"report.txt", report_table(rep)});
  return out;
}

int run_command(const std::string& name, const RunConfig& cfg) {
  try {
    CommandOutput out;
    if (name == "build")
      out = cmd_build(cfg);
    else if (name == "census")
      out = cmd_census(cfg);
    else if (name == "dim")
      out = cmd_dim(cfg);
    else if (name == "report")
      out = cmd_report(cfg);
    else
      throw ConfigError("command", "unknown command '" + name + "'");
    if (cfg.out.empty()) {
      std::cout << out.primary;
      return 0;
    }
    std::filesystem::create_directories(cfg.out);
    for (const auto& [file, content] : out.files) {
      const auto path = std::filesystem::path(cfg.out) / file;
      std::ofstream f(path, std::ios::binary | std::ios::trunc);
      f << content;
      if (!f) throw ComputationError("cannot write " + path.string());
      std::cerr << "wrote " << path.string() << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fsimple
