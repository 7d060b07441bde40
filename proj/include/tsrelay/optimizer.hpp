#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "tsrelay/params.hpp"

namespace tsrelay {

struct GaConfig {
  unsigned k_ini = 100;
  double epsilon = 0.5;
  double mu = 0.05;
  double delta = 1e-5;
  unsigned max_generations = 500;
  std::uint64_t seed = 1;

  void validate() const;
  /// Number of survivors, epsilon * k_ini rounded, at least 2.
  unsigned survivors() const;
};

/// Genes in [0, 1]: {rho} for TSNCR, {rho, theta} for TSFPR.
struct Chromosome {
  std::vector<double> genes;
  double fitness = 1.0;
};

enum class Termination { precision, max_generations };

std::string_view to_string(Termination t);

struct GaTrace {
  /// Best objective of generation t, t = 0 .. generations.
  std::vector<double> q_min;
  unsigned generations = 0;
  Termination terminated_by = Termination::precision;
};

struct GaResult {
  Chromosome best;
  GaTrace trace;
};

/// Objective to minimise over genes in [0, 1]^n.
using Objective = std::function<double(std::span<const double>)>;

/// Genetic algorithm over real-coded genes:
///  1. k_ini uniform random chromosomes;
///  2. evaluate; stop when Q_min(t-1) - Q_min(t) < delta (skipped at t = 0) or
///     after max_generations;
///  3. keep the epsilon * k_ini best;
///  4. pick two distinct mates by roulette wheel with weight (1 - fitness) + 1e-9;
///  5. crossover: with two genes the second gene is swapped, with one gene the
///     children are alpha p1 + (1 - alpha) p2 and (1 - alpha) p1 + alpha p2,
///     alpha ~ U[0, 1]; repeat until the population is back to k_ini;
///  6. each offspring gene is redrawn uniformly with probability mu.
/// Survivors are carried over unchanged, so Q_min(t) never increases.
GaResult ga_optimize(const Objective& objective, std::size_t gene_count, const GaConfig& config);

/// GA on the closed-form outage probability of `kind` (rho for TSNCR, rho and theta for TSFPR).
GaResult ga_optimize(const SystemParams& params, Protocol kind, const GaConfig& config);

struct GridResult {
  double rho = 0.0;
  double theta = 0.5;
  double objective = 1.0;
  std::size_t evaluations = 0;
};

/// Exhaustive search on {i / n : i = 0..n}, n = ceil(1 / resolution) (so the step never
/// exceeds `resolution`); a 2-D grid for TSFPR. Ties go to the smaller rho, then the
/// smaller theta. TSNCR reports theta = 0.5 (unused). Requires 0 < resolution <= 0.1.
GridResult grid_search(const SystemParams& params, Protocol kind, double resolution);

}  // namespace tsrelay
