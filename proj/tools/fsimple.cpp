#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "fsimple/commands.hpp"
#include "fsimple/errors.hpp"

namespace {

struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

const Flag kFlags[] = {
    {"--surface", "surface", "octagon | fn"},
    {"--fn", "fn", "Fenchel-Nielsen parameters l1,l2,l3,t1,t2,t3 (hyperbolic length units); implies --surface fn"},
    {"--word-radius", "word_radius", "census class word length (default 4)"},
    {"--search-radius", "search_radius", "crossing search radius (default 3)"},
    {"--systole-radius", "systole_radius", "systole class word length (default 8)"},
    {"--rmax", "rmax", "orbit growth cutoff R_max (default 14)"},
    {"--prune-margin", "prune_margin", "orbit walk pruning margin beyond R_max (default 4)"},
    {"--sample-radius", "sample_radius", "limit-set sample word radius (default 9)"},
    {"--filter", "filter", "constant:c | power:c,p | linear:tau | logquotient:c (default constant:0)"},
    {"--schedule", "schedule", "exp:B | list:a1,a2,... | minimal (default exp:2)"},
    {"--curve", "curve", "cutting curve word for dim (default a)"},
    {"--subgroup", "subgroup", "cut | cyclic | full (default cut)"},
    {"--sweep", "sweep", "census: tau values for the N(L, tau) table"},
    {"--out", "out", "output directory (default: primary output on stdout)"},
    {"--format", "format", "csv | json | svg | text"},
    {"--workers", "workers", "worker threads (default 1); outputs do not depend on it"},
    {"--cache-dir", "cache_dir", "ball cache directory (else $FSIMPLE_CACHE_DIR, else no cache)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-simple geodesics, cut-surface limit sets and their dimension bounds"};
  app.require_subcommand(1, 1);
  std::string configFile;
  bool printConfig = false;
  app.add_option("--config", configFile, "flat 'key = value' configuration file; flags override it");
  app.add_flag("--print-config", printConfig, "print the normalized configuration to stderr");
  std::map<std::string, std::string> given;
  for (const Flag& f : kFlags) app.add_option(f.name, given[f.key], f.help);
  app.footer(
      "Exit codes: 0 success, 1 computational failure (uncertified, truncated), 2 configuration error.\n"
      "Environment: FSIMPLE_CACHE_DIR sets the ball cache root.");
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"build", "construct the surface group and report generators"},
      {"census", "closed geodesics with self-intersection counts and f-simple flags"},
      {"dim", "cut-subgroup critical exponent, box dimension, bound report and SVG"},
      {"report", "systole and all closed-form bounds"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  fsimple::RunConfig cfg;
  try {
    if (!configFile.empty()) {
      std::ifstream in(configFile);
      if (!in) throw fsimple::ConfigError("config", "cannot read " + configFile);
      std::stringstream ss;
      ss << in.rdbuf();
      fsimple::apply_config_text(cfg, ss.str());
    }
    for (const Flag& f : kFlags)
      if (app.count(f.name) > 0) fsimple::apply_config_value(cfg, f.key, given[f.key]);
    cfg.validate();
  } catch (const fsimple::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (printConfig) std::cerr << cfg.normalized();
  return fsimple::run_command(app.get_subcommands().front()->get_name(), cfg);
}
