// Command-line front end: regenerates the figure data sets, evaluates a single
// configuration, or runs the GA optimiser.
//
//   tsrelay fig3|fig4|fig5|fig6|fig7 [--scenario s.json] [--out fig.csv] [--seed N] [--samples N]
//   tsrelay eval     [--scenario s.json] [--seed N] [--samples N]
//   tsrelay optimize [--scenario s.json] [--out trace.csv] [--seed N]
//
// Errors are reported as one JSON line on stderr: {"error": kind, "message": text}.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsrelay/errors.hpp"
#include "tsrelay/experiments.hpp"
#include "tsrelay/montecarlo.hpp"
#include "tsrelay/optimizer.hpp"
#include "tsrelay/outage.hpp"
#include "tsrelay/scenario.hpp"

namespace {

using namespace tsrelay;
using nlohmann::json;

struct Options {
  std::string scenario;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
};

void add_common(CLI::App* cmd, Options& opt, bool with_out) {
  cmd->add_option("--scenario", opt.scenario, "Scenario JSON file (all fields optional)");
  if (with_out) cmd->add_option("--out", opt.out, "Output CSV path");
  cmd->add_option("--seed", opt.seed, "Seed for Monte Carlo and GA");
  cmd->add_option("--samples", opt.samples, "Monte Carlo sample count (0 disables sampling)");
}

Scenario resolve(const Options& opt) {
  Scenario s = opt.scenario.empty() ? Scenario{} : Scenario::load(opt.scenario);
  if (opt.seed) {
    s.mc_seed = *opt.seed;
    s.ga.seed = *opt.seed;
  }
  if (opt.samples) s.mc_samples = *opt.samples;
  s.validate();
  return s;
}

void write_outputs(const Table& table, const Scenario& s, const std::string& out) {
  const std::filesystem::path csv(out);
  write_csv_file(table, csv);
  std::filesystem::path sidecar = csv;
  sidecar.replace_extension(".json");
  std::ofstream js(sidecar, std::ios::binary | std::ios::trunc);
  if (!js) throw IoError("cannot open '" + sidecar.string() + "' for writing");
  js << s.to_json();
  if (!js) throw IoError("failed writing '" + sidecar.string() + "'");
  std::cout << csv.string() << '\n';
}

void run_eval(const Scenario& s) {
  const std::uint64_t samples = s.mc_samples.value_or(1'000'000);
  for (Protocol kind : protocols_of(s.protocols)) {
    const ProtocolConfig config{kind, s.rho, s.theta};
    const OutageValue v = outage(s.params, config);
    json j = {{"protocol", to_string(kind)},
              {"rho", s.rho},
              {"p_out", v.probability},
              {"branch", to_string(v.branch)},
              {"capacity", outage_capacity(s.params, config, v.probability)}};
    if (kind == Protocol::tsfpr) j["theta"] = s.theta;
    if (samples > 0) {
      const McEstimate est = estimate_outage(s.params, config, s.mc_config(samples));
      j["p_hat"] = est.p_hat;
      j["std_err"] = est.std_err;
      j["p_joint"] = est.p_joint;
      j["samples"] = est.n_samples;
      j["seed"] = est.seed;
    }
    std::cout << j.dump() << '\n';
  }
}

void run_optimize(const Scenario& s, const std::string& out) {
  Table trace;
  trace.columns = {"generation", "protocol", "q_min"};
  json summary = json::array();
  for (Protocol kind : protocols_of(s.protocols)) {
    const GaResult r = ga_optimize(s.params, kind, s.ga);
    json j = {{"protocol", to_string(kind)},
              {"p_out", r.best.fitness},
              {"rho", r.best.genes[0]},
              {"generations", r.trace.generations},
              {"terminated_by", to_string(r.trace.terminated_by)}};
    if (kind == Protocol::tsfpr) j["theta"] = r.best.genes[1];
    summary.push_back(j);
    for (std::size_t g = 0; g < r.trace.q_min.size(); ++g) {
      trace.rows.push_back({Cell{static_cast<std::int64_t>(g)}, Cell{std::string(to_string(kind))},
                            Cell{r.trace.q_min[g]}});
    }
  }
  write_csv_file(trace, out);
  for (const auto& j : summary) std::cout << j.dump() << '\n';
  std::cout << json{{"trace", out}}.dump() << '\n';
}

int report(const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outage evaluation, simulation and optimisation of time-switching energy-harvesting two-way relaying"};
  app.require_subcommand(1);

  Options opt;
  struct Figure {
    const char* name;
    const char* help;
  };
  const Figure figures[] = {
      {"fig3", "Closed-form vs Monte Carlo outage over rho"},
      {"fig4", "Closed-form outage over rho (and theta for TSFPR)"},
      {"fig5", "Optimal outage, parameters and capacity vs relay position d1 (d2 = 2 - d1)"},
      {"fig6", "Optimal outage vs P2 at fixed P1"},
      {"fig7", "GA convergence trace"},
  };
  for (const auto& f : figures) add_common(app.add_subcommand(f.name, f.help), opt, true);
  add_common(app.add_subcommand("eval", "Closed-form and Monte Carlo outage at the scenario's rho/theta"), opt, false);
  add_common(app.add_subcommand("optimize", "Run the GA and write its trace"), opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("usage_error", e.what());
    return e.get_exit_code() != 0 ? e.get_exit_code() : 2;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    const Scenario s = resolve(opt);
    const std::string out = opt.out.empty() ? (cmd == "optimize" ? "optimize_trace.csv" : cmd + ".csv") : opt.out;
    if (cmd == "fig3") {
      write_outputs(run_fig3(s).to_table(), s, out);
    } else if (cmd == "fig4") {
      write_outputs(run_fig4(s).to_table(), s, out);
    } else if (cmd == "fig5") {
      write_outputs(run_fig5(s).to_table(), s, out);
    } else if (cmd == "fig6") {
      write_outputs(run_fig6(s).to_table(), s, out);
    } else if (cmd == "fig7") {
      write_outputs(run_fig7(s), s, out);
    } else if (cmd == "eval") {
      run_eval(s);
    } else {
      run_optimize(s, out);
    }
  } catch (const tsrelay::Error& e) {
    return report(e.kind(), e.what());
  } catch (const std::exception& e) {
    return report("error", e.what());
  }
  return 0;
}
