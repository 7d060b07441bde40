#include "tsrelay/experiments.hpp"

#include "tsrelay/errors.hpp"
#include "tsrelay/montecarlo.hpp"
#include "tsrelay/optimizer.hpp"

namespace tsrelay {

namespace {

constexpr std::uint64_t kFig3Samples = 1'000'000;

Cell opt_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

std::vector<SweepAxis> axes_or(const Scenario& s, std::vector<SweepAxis> fallback) {
  return s.sweep.empty() ? fallback : s.sweep;
}

void require_axis(const std::vector<SweepAxis>& axes, const char* variable, const char* figure) {
  if (axes.size() != 1 || axes[0].variable != variable) {
    throw ParameterError(std::string(figure) + " sweeps exactly one variable, '" + variable + "'");
  }
}

void attach_mc(SweepRow& row, const SystemParams& params, const ProtocolConfig& config, const Scenario& s,
               std::uint64_t samples) {
  if (samples == 0) return;
  const McEstimate est = estimate_outage(params, config, s.mc_config(samples));
  row.p_hat = est.p_hat;
  row.std_err = est.std_err;
  row.p_joint = est.p_joint;
}

SweepRow evaluate_row(const SystemParams& params, const ProtocolConfig& config, std::vector<double> swept) {
  SweepRow row;
  row.swept = std::move(swept);
  row.protocol = config.kind;
  const OutageValue v = outage(params, config);
  row.p_out = v.probability;
  row.branch = v.branch;
  row.capacity = outage_capacity(params, config, v.probability);
  return row;
}

// Optimised sweep shared by the relay-location and source-power figures.
SweepTable optimised_sweep(const Scenario& scenario, const SweepAxis& axis, bool mirror_d2) {
  SweepTable table;
  table.variables = {axis.variable};
  const std::uint64_t samples = scenario.mc_samples.value_or(0);
  for (double value : axis.values) {
    SystemParams params = scenario.params;
    ProtocolConfig unused;
    apply_variable(axis.variable, value, params, unused);
    if (mirror_d2) params.d2 = 2.0 - params.d1;
    for (Protocol kind : protocols_of(scenario.protocols)) {
      SweepRow row = optimise_row(params, kind, scenario.grid_resolution);
      row.swept = {value};
      attach_mc(row, params, {kind, *row.rho_opt, row.theta_opt.value_or(0.5)}, scenario, samples);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace

Table SweepTable::to_table() const {
  Table t;
  t.columns = variables;
  for (const char* c : {"protocol", "p_out", "branch", "p_hat", "std_err", "p_joint", "capacity", "rho_opt",
                        "theta_opt"}) {
    t.columns.emplace_back(c);
  }
  for (const auto& r : rows) {
    std::vector<Cell> cells;
    for (double v : r.swept) cells.emplace_back(v);
    cells.emplace_back(std::string(to_string(r.protocol)));
    cells.emplace_back(r.p_out);
    cells.emplace_back(std::string(to_string(r.branch)));
    cells.push_back(opt_cell(r.p_hat));
    cells.push_back(opt_cell(r.std_err));
    cells.push_back(opt_cell(r.p_joint));
    cells.emplace_back(r.capacity);
    cells.push_back(opt_cell(r.rho_opt));
    cells.push_back(opt_cell(r.theta_opt));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

SweepRow optimise_row(const SystemParams& params, Protocol kind, double resolution) {
  const GridResult best = grid_search(params, kind, resolution);
  const ProtocolConfig config{kind, best.rho, best.theta};
  SweepRow row = evaluate_row(params, config, {});
  row.rho_opt = best.rho;
  if (kind == Protocol::tsfpr) row.theta_opt = best.theta;
  return row;
}

SweepTable run_fig3(const Scenario& scenario) {
  scenario.validate();
  const auto axes = axes_or(scenario, {{"rho", linspace_step(0.0, 1.0, 0.05)}});
  require_axis(axes, "rho", "fig3");
  const std::uint64_t samples = scenario.mc_samples.value_or(kFig3Samples);

  SweepTable table;
  table.variables = {"rho"};
  for (double rho : axes[0].values) {
    for (Protocol kind : protocols_of(scenario.protocols)) {
      const ProtocolConfig config{kind, rho, scenario.theta};
      SweepRow row = evaluate_row(scenario.params, config, {rho});
      attach_mc(row, scenario.params, config, scenario, samples);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

SweepTable run_fig4(const Scenario& scenario) {
  scenario.validate();
  auto axes = axes_or(scenario, {{"rho", linspace_step(0.0, 1.0, 0.01)}, {"theta", linspace_step(0.0, 1.0, 0.1)}});
  if (axes.size() == 1) axes.push_back({"theta", {scenario.theta}});
  if (axes[0].variable != "rho" || axes[1].variable != "theta") {
    throw ParameterError("fig4 sweeps 'rho' then 'theta'");
  }
  const std::uint64_t samples = scenario.mc_samples.value_or(0);

  SweepTable table;
  table.variables = {"rho", "theta"};
  for (double rho : axes[0].values) {
    for (Protocol kind : protocols_of(scenario.protocols)) {
      // TSNCR has no theta: one row per rho with an empty theta cell.
      const std::vector<double> thetas = kind == Protocol::tsncr ? std::vector<double>{scenario.theta} : axes[1].values;
      for (double theta : thetas) {
        const ProtocolConfig config{kind, rho, theta};
        SweepRow row = evaluate_row(scenario.params, config, {rho, theta});
        attach_mc(row, scenario.params, config, scenario, samples);
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

SweepTable run_fig5(const Scenario& scenario) {
  scenario.validate();
  const auto axes = axes_or(scenario, {{"d1", linspace_step(0.1, 1.9, 0.1)}});
  require_axis(axes, "d1", "fig5");
  for (double d1 : axes[0].values) {
    if (!(d1 > 0.0 && d1 < 2.0)) throw ParameterError("fig5 needs 0 < d1 < 2 so that d2 = 2 - d1 > 0");
  }
  return optimised_sweep(scenario, axes[0], true);
}

SweepTable run_fig6(const Scenario& scenario) {
  scenario.validate();
  const auto axes = axes_or(scenario, {{"P2", linspace_step(0.5, 1.5, 0.1)}});
  require_axis(axes, "P2", "fig6");
  return optimised_sweep(scenario, axes[0], false);
}

Table run_fig7(const Scenario& scenario) {
  scenario.validate();
  Table t;
  t.columns = {"generation", "protocol", "q_min"};
  for (Protocol kind : protocols_of(scenario.protocols)) {
    const GaResult r = ga_optimize(scenario.params, kind, scenario.ga);
    for (std::size_t g = 0; g < r.trace.q_min.size(); ++g) {
      t.rows.push_back({Cell{static_cast<std::int64_t>(g)}, Cell{std::string(to_string(kind))}, Cell{r.trace.q_min[g]}});
    }
  }
  return t;
}

}  // namespace tsrelay
