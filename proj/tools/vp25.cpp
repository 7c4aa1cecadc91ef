#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "vp25/core/error.hpp"
#include "vp25/harness/experiment.hpp"

int main(int argc, char** argv) {
  vp25::Config cfg = vp25::Config::defaults();
  CLI::App app{"Two-species Vlasov-Poisson simulator with external magnetic field"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vp25::kVersion);

  std::string config_file;
  std::map<std::string, std::string> flags;
  const char* kinds[] = {"steady", "evolve", "perturb-init", "perturb-field", "combined"};
  const char* descriptions[] = {
      "construct the steady state and certify the assumptions",
      "evolve the (optionally perturbed) steady state and record diagnostics",
      "stability report for perturbed initial data",
      "paired runs under a perturbed external field",
      "perturbed initial data and field, decomposed bound"};
  for (int k = 0; k < 5; ++k) {
    CLI::App* sub = app.add_subcommand(kinds[k], descriptions[k]);
    sub->add_option("-c,--config", config_file, "flat key = value file");
    for (const auto& e : cfg.entries()) {
      if (e.key == "kind") continue;
      sub->add_option_function<std::string>(
          "--" + e.key, [&flags, key = e.key](const std::string& v) { flags[key] = v; },
          e.help + " (default: " + (e.value.empty() ? "required" : e.value) + ")");
    }
  }
  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_file.empty()) cfg.load_file(config_file);
    for (const auto& [k, v] : flags) cfg.set_flag(k, v);
    cfg.set_flag("kind", app.get_subcommands().front()->get_name());
    const vp25::ExperimentResult r = vp25::run_experiment(cfg);
    std::cout << r.summary << "artifacts in " << r.directory << "\n";
    return r.pass ? 0 : 1;
  } catch (const vp25::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
