#include "tamehecke/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace tamehecke;

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> bound_length;
  std::optional<int> bound_offset;
  int index = 0;
  std::optional<int> window;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON job configuration")->required();
  cmd->add_option("--seed", o.seed, "seed for sampled checks (overrides config)");
  cmd->add_option("--bound-length", o.bound_length, "word length cap for sampled elements");
  cmd->add_option("--bound-offset", o.bound_offset, "offset cap for chi_a tables");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
}

JobConfig load(const Options& o) {
  JobConfig cfg = load_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (o.bound_length) {
    if (*o.bound_length < 0) throw ConfigError("--bound-length: must be nonnegative");
    cfg.bounds.word_length = *o.bound_length;
  }
  if (o.bound_offset) {
    if (*o.bound_offset < 0) throw ConfigError("--bound-offset: must be nonnegative");
    cfg.bounds.offset = *o.bound_offset;
  }
  if (o.window) {
    if (*o.window < 1) throw ConfigError("--window: must be positive");
    cfg.bounds.window = *o.window;
  }
  return cfg;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

void print_timings(const Report& rep) {
  for (const auto& [label, secs] : rep.timings) std::cerr << "time " << label << " " << secs << "s\n";
}

int cmd_report(const Options& o) {
  JobConfig cfg = load(o);
  for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
  Report rep = run(cfg);
  emit(o.out, rep.doc.dump(2) + "\n");
  std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out).parent_path();
  for (const auto& [name, svg] : rep.figures) emit((dir / name).string(), svg);
  print_timings(rep);
  for (const auto& f : rep.failures) std::cerr << "FAIL " << f << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_check(const Options& o) {
  JobConfig cfg = load(o);
  cfg.tasks.erase("apartment-svg");
  Report rep = run(cfg);
  std::ostringstream os;
  const auto& chars = rep.doc["characters"];
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& c = chars[i];
    std::string where = "characters[" + std::to_string(i) + "]";
    if (c.contains("skipped")) {
      os << "SKIP " << where << " " << c["skipped"].get<std::string>() << "\n";
      continue;
    }
    if (c.contains("chi_report")) os << c["chi_report"]["verdict"].get<std::string>() << " " << where << ".chi-report\n";
    if (c.contains("hecke_check"))
      for (const auto& r : c["hecke_check"]["relations"])
        os << r["verdict"].get<std::string>() << " " << where << ".hecke-check." << r["relation"].get<std::string>()
           << " (" << r["checked"].get<int>() << ")\n";
    if (c.contains("shimura_check")) {
      const auto& s = c["shimura_check"];
      os << s["upsilon"]["verdict"].get<std::string>() << " " << where << ".shimura-check.upsilon\n";
      os << "info " << where << ".shimura-check.full_algebras " << s["fullness"]["full_algebras"].get<std::string>()
         << "\n";
    }
  }
  os << (rep.pass ? "pass" : "fail") << " overall\n";
  emit(o.out, os.str());
  print_timings(rep);
  for (const auto& f : rep.failures) std::cerr << "FAIL " << f << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_apartment(const Options& o) {
  JobConfig cfg = load(o);
  if (o.index < 0 || o.index >= static_cast<int>(cfg.characters.size()))
    throw ConfigError("--index: no character with index " + std::to_string(o.index));
  const auto& spec = cfg.characters[o.index];
  GenuineCharacter chi(cfg.context, spec.m, spec.depth);
  if (!chi.is_depth_zero()) throw ConfigError("characters[" + std::to_string(o.index) + "]: apartment needs depth zero");
  ChiGeometry g(chi);
  ApartmentBounds b;
  b.lo = -cfg.bounds.window;
  b.hi = cfg.bounds.window;
  ApartmentFigure fig = apartment_svg(g, b);
  emit(o.out, fig.svg);
  std::cerr << "walls " << fig.stats.affine_walls << " chi " << fig.stats.chi_walls << " diamond "
            << fig.stats.diamond_walls << " chi-alcove " << fig.stats.chi_boundary << " diamond-alcove "
            << fig.stats.diamond_boundary << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted affine root systems, Hecke algebras and the local Shimura comparison for tame covers"};
  app.require_subcommand(1);
  Options o;
  auto* report = app.add_subcommand("report", "run the configured tasks and write a JSON report");
  auto* check = app.add_subcommand("check", "run the checks and print one verdict line per check");
  auto* apartment = app.add_subcommand("apartment", "write the apartment SVG for one character");
  add_common(report, o);
  add_common(check, o);
  add_common(apartment, o);
  apartment->add_option("--index", o.index, "character index in the config");
  apartment->add_option("--window", o.window, "coordinate window [-w, w] (overrides config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (report->parsed()) return cmd_report(o);
    if (check->parsed()) return cmd_check(o);
    return cmd_apartment(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
