#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsrelay/outage.hpp"
#include "tsrelay/scenario.hpp"
#include "tsrelay/table.hpp"

namespace tsrelay {

/// One evaluated point of a sweep for one protocol.
struct SweepRow {
  std::vector<double> swept;
  Protocol protocol = Protocol::tsncr;
  double p_out = 1.0;
  Branch branch = Branch::degenerate;
  std::optional<double> p_hat;
  std::optional<double> std_err;
  std::optional<double> p_joint;
  double capacity = 0.0;
  std::optional<double> rho_opt;
  std::optional<double> theta_opt;
};

/// Sweep rows plus the names of the swept variables. CSV columns are
/// <variables...>,protocol,p_out,branch,p_hat,std_err,p_joint,capacity,rho_opt,theta_opt
/// with empty cells where a field does not apply.
struct SweepTable {
  std::vector<std::string> variables;
  std::vector<SweepRow> rows;

  Table to_table() const;
};

/// Analytic and sampled outage side by side over rho (default 0..1 step 0.05,
/// theta 0.5, 10^6 samples).
SweepTable run_fig3(const Scenario& scenario);

/// Closed-form outage surface over rho x theta for TSFPR and over rho for TSNCR
/// (default rho step 0.01, theta step 0.1; no sampling).
SweepTable run_fig4(const Scenario& scenario);

/// Relay-location sweep with d2 = 2 - d1 (default d1 = 0.1..1.9 step 0.1). Each
/// row is the grid-search optimum over rho (and theta) with its outage capacity.
SweepTable run_fig5(const Scenario& scenario);

/// Source power sweep over P2 at the scenario's P1 (default 0.5..1.5 step 0.1),
/// optimised like run_fig5.
SweepTable run_fig6(const Scenario& scenario);

/// GA convergence trace Q_min(t) of every selected protocol: columns
/// generation,protocol,q_min.
Table run_fig7(const Scenario& scenario);

/// Optimum of one protocol under `params` by grid search at `resolution`.
SweepRow optimise_row(const SystemParams& params, Protocol kind, double resolution);

}  // namespace tsrelay
