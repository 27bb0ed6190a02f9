// gravcat: sweep driver for the gravitational-cat two-qubit model.
//
//   gravcat run --preset <name> [--set key=value ...] --out <path>
//   gravcat run --config <file> --out <path>
//   gravcat presets
//   gravcat show --preset <name>
//   gravcat gnuplot --preset <name> --csv <data.csv> --out <script.gp>
//   gravcat selfcheck [--count N]
//
// Exit codes: 0 success, 1 configuration error, 2 numeric error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gravcat/oracles.hpp"
#include "gravcat/scenario.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

int run_command(const std::string& preset, const std::string& config_path, const std::vector<std::string>& sets,
                const std::string& out, unsigned workers) {
  gravcat::SweepConfig cfg =
      preset.empty() ? gravcat::load_config(config_path) : gravcat::find_preset(preset).config;
  for (const auto& s : sets) gravcat::apply_override(cfg, s);
  const auto table = gravcat::run_scenario(cfg, {workers});
  gravcat::emit_csv(table, out);
  std::cerr << "wrote " << table.rows.size() << " rows to " << out << "\n";
  return 0;
}

int presets_command() {
  for (const auto& p : gravcat::list_presets()) {
    std::printf("%-8s %-12s %s\n", p.name.c_str(), p.figure.c_str(), p.description.c_str());
  }
  return 0;
}

int selfcheck_command(std::size_t count) {
  bool ok = true;
  for (const auto& r : gravcat::oracle::run_selfcheck(count)) {
    std::printf("[%s] %-48s max error %.3e (tolerance %.0e, %zu samples)\n", r.passed() ? "PASS" : "FAIL",
                r.name.c_str(), r.max_error, r.tolerance, r.samples);
    ok = ok && r.passed();
  }
  return ok ? 0 : kExitNumeric;
}

int gnuplot_command(const std::string& preset, const std::string& csv, const std::string& out) {
  const std::string script = gravcat::gnuplot_script(gravcat::find_preset(preset), csv);
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << script)) throw gravcat::IoError("cannot write '" + out + "'");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gravitational-cat two-qubit correlation sweeps"};
  app.require_subcommand(1);

  std::string preset;
  std::string config_path;
  std::string out;
  std::string csv;
  std::vector<std::string> sets;
  unsigned workers = 0;
  std::size_t count = 1000;

  auto* run = app.add_subcommand("run", "Run a preset or a config file and write CSV");
  auto* preset_opt = run->add_option("--preset", preset, "Preset name (see `presets`)");
  auto* config_opt = run->add_option("--config", config_path, "Scenario config file");
  preset_opt->excludes(config_opt);
  run->add_option("--set", sets, "Override a fixed parameter, key=value (repeatable)");
  run->add_option("--out", out, "Output CSV path")->required();
  run->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");

  auto* list = app.add_subcommand("presets", "List the built-in presets");

  auto* show = app.add_subcommand("show", "Print a preset as a config file");
  show->add_option("--preset", preset, "Preset name")->required();

  auto* plot = app.add_subcommand("gnuplot", "Write a gnuplot script for a preset's CSV");
  plot->add_option("--preset", preset, "Preset name")->required();
  plot->add_option("--csv", csv, "CSV produced by `run`")->required();
  plot->add_option("--out", out, "Script path")->required();

  auto* check = app.add_subcommand("selfcheck", "Compare closed forms against brute-force oracles");
  check->add_option("--count", count, "Random thermal states to test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) {
      if (preset.empty() && config_path.empty()) throw gravcat::ConfigError("run needs --preset or --config");
      return run_command(preset, config_path, sets, out, workers);
    }
    if (list->parsed()) return presets_command();
    if (show->parsed()) {
      std::cout << gravcat::format_config(gravcat::find_preset(preset).config);
      return 0;
    }
    if (plot->parsed()) return gnuplot_command(preset, csv, out);
    if (check->parsed()) return selfcheck_command(count);
  } catch (const gravcat::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const gravcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
