// polembed: run embedding scans from scenario files or built-in presets.

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "polembed/errors.hpp"
#include "polembed/output.hpp"
#include "polembed/presets.hpp"
#include "polembed/scenario.hpp"

namespace {

struct Options {
  std::string out_dir = ".";
  double tolerance = 0.0;
  int threads = 0;
  bool no_plot = false;
};

void run_all(std::vector<polembed::Scenario> scenarios, const Options& opt) {
  const int threads = opt.threads > 0 ? opt.threads
                                      : std::max(1u, std::thread::hardware_concurrency());
  for (auto& s : scenarios) {
    if (opt.tolerance > 0.0) {
      s.quadrature.rel_tol = opt.tolerance;
      s.metadata.emplace_back("cli.tolerance", std::to_string(opt.tolerance));
    }
    const auto result = polembed::run_scenario(s, threads);
    if (result.size_warnings > 0) {
      std::cerr << "warning: " << s.name << ": R_C k > 0.3 at " << result.size_warnings
                << " grid points; the local-field model assumes R_C k << 1\n";
    }
    const auto csv = std::filesystem::path(opt.out_dir) / s.csv_path;
    polembed::emit_csv(result, csv);
    std::cout << csv.string() << '\n';
    if (!opt.no_plot) {
      const auto svg = std::filesystem::path(opt.out_dir) / s.plot_path;
      polembed::emit_plot(result, svg, s.log_y);
      std::cout << svg.string() << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedding scans for collective light-matter coupling"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--tolerance", opt.tolerance, "relative quadrature tolerance (overrides scenario)")
      ->check(CLI::Range(1e-15, 1e-3));
  app.add_option("--threads", opt.threads, "worker threads (default: hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--no-plot", opt.no_plot, "write CSV only");

  std::string scenario_file;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario-file", scenario_file)->required()->check(CLI::ExistingFile);
  run->add_option("--out", opt.out_dir, "output directory");

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "run a built-in preset");
  preset->add_option("name", preset_name)->required();
  preset->add_option("--out", opt.out_dir, "output directory");

  auto* list = app.add_subcommand("list-presets", "list built-in presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      run_all(polembed::load_scenarios(scenario_file), opt);
    } else if (*preset) {
      run_all(polembed::load_preset(preset_name), opt);
    } else if (*list) {
      for (const auto& p : polembed::list_presets()) {
        std::cout << p.name << "  " << p.description << '\n';
      }
    }
  } catch (const polembed::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
