#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <isospec/version.hpp>

#include "config.hpp"
#include "output.hpp"
#include "runner.hpp"

namespace cli = isospec::cli;

namespace {

int report(const std::string& category, const std::string& message, int code) {
  std::fprintf(stderr, "isospec: %s: %s\n", category.c_str(), message.c_str());
  return code;
}

std::string dashed(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return key;
}

// One subcommand that builds an ExperimentConfig from --config plus per-key
// flags. `forced` pins the experiment for the dedicated subcommands.
struct RunCommand {
  CLI::App* app = nullptr;
  std::optional<cli::Experiment> forced;
  std::string config_file;
  std::map<std::string, std::string> flags;

  void attach(CLI::App& parent, const std::string& name, const std::string& desc,
              std::optional<cli::Experiment> experiment) {
    forced = experiment;
    app = parent.add_subcommand(name, desc);
    app->allow_extras();
    app->add_option("-c,--config", config_file, "key = value config file");
    for (const auto& key : cli::config_keys()) {
      if (forced && key == "experiment") continue;
      std::string names = "--" + dashed(key);
      if (key.find('_') != std::string::npos) names += ",--" + key;
      app->add_option(names, flags[key], "config key " + key);
    }
  }

  bool parsed() const { return app != nullptr && app->parsed(); }

  int execute() const {
    cli::ExperimentConfig cfg;
    try {
      const auto extras = app->remaining();
      if (!extras.empty()) {
        const std::string& word = extras.front();
        std::string msg = "unexpected argument '" + word + "'";
        if (word.rfind("--", 0) == 0) {
          const std::string hint = cli::suggest(word.substr(2), cli::config_keys());
          if (!hint.empty()) msg += " (did you mean '--" + dashed(hint) + "'?)";
        }
        throw cli::ConfigError(msg);
      }
      cli::KeyValues kv;
      if (!config_file.empty()) kv = cli::read_config_file(config_file);
      for (const auto& key : cli::config_keys()) {
        const auto it = flags.find(key);
        if (it == flags.end()) continue;
        const CLI::Option* opt = app->get_option_no_throw("--" + dashed(key));
        if (opt != nullptr && opt->count() > 0) kv.emplace_back(key, it->second);
      }
      if (forced) kv.emplace_back("experiment", std::string(cli::to_string(*forced)));
      cli::apply(cfg, kv);
    } catch (const cli::ConfigError& e) {
      return report("config_error", e.what(), cli::kExitConfig);
    } catch (const cli::IoError& e) {
      return report("io_error", e.what(), cli::kExitIo);
    }
    const cli::RunResult r = cli::run(cfg);
    if (r.exit_code != cli::kExitOk) return report(r.category, r.message, r.exit_code);
    std::printf("wrote %s\n", r.manifest.string().c_str());
    return cli::kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isospectral minimal midpoint experiments"};
  app.set_version_flag("--version", std::string("isospec ") + isospec::kVersion);
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::vector<RunCommand> commands(7);
  commands[0].attach(app, "run", "Run the experiment named in the config", std::nullopt);
  commands[1].attach(app, "rigid-body", "Free rigid body on so(n)", cli::Experiment::RigidBody);
  commands[2].attach(app, "brockett", "Brockett double bracket flow", cli::Experiment::Brockett);
  commands[3].attach(app, "spin-chain", "Heisenberg spin chain on S2", cli::Experiment::SpinChain);
  commands[4].attach(app, "point-vortex", "Point vortices on the hyperbolic plane",
                     cli::Experiment::PointVortex);
  commands[5].attach(app, "convergence", "Order of accuracy sweep", cli::Experiment::Convergence);
  commands[6].attach(app, "bench", "Cost per step against chain length", cli::Experiment::Bench);

  std::string list_scheme;
  CLI::App* list = app.add_subcommand("list", "List experiments, schemes and initial data");
  list->add_option("--scheme", list_scheme, "only experiments this scheme applies to");

  int figure = 0;
  std::string figure_dir = "figures";
  CLI::App* repro = app.add_subcommand("reproduce-figure", "Run the setup behind a figure");
  repro->add_option("id", figure, "figure id 1..7")->required();
  repro->add_option("-o,--output-dir", figure_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("config_error", e.what(), cli::kExitConfig);
  }

  for (const auto& c : commands) {
    if (c.parsed()) return c.execute();
  }

  if (list->parsed()) {
    try {
      std::fputs(cli::list_experiments(list_scheme).c_str(), stdout);
    } catch (const cli::ConfigError& e) {
      return report("config_error", e.what(), cli::kExitConfig);
    }
    return cli::kExitOk;
  }

  if (repro->parsed()) {
    std::vector<cli::ExperimentConfig> configs;
    try {
      configs = cli::figure_configs(figure, figure_dir);
    } catch (const cli::ConfigError& e) {
      return report("config_error", e.what(), cli::kExitConfig);
    }
    for (const auto& cfg : configs) {
      const cli::RunResult r = cli::run(cfg);
      if (r.exit_code != cli::kExitOk) return report(r.category, r.message, r.exit_code);
      std::printf("wrote %s\n", r.manifest.string().c_str());
    }
    return cli::kExitOk;
  }
  return cli::kExitOk;
}
