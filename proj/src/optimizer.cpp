#include "tsrelay/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tsrelay/errors.hpp"
#include "tsrelay/outage.hpp"
#include "tsrelay/rng.hpp"

namespace tsrelay {

namespace {

constexpr double kRouletteFloor = 1e-9;

struct Population {
  std::vector<Chromosome> members;

  void sort_by_fitness() {
    std::stable_sort(members.begin(), members.end(),
                     [](const Chromosome& x, const Chromosome& y) { return x.fitness < y.fitness; });
  }
};

std::size_t roulette(std::span<const double> weights, double total, Rng& rng, std::size_t exclude) {
  for (;;) {
    double r = rng.uniform() * total;
    std::size_t pick = weights.size() - 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (r < weights[i]) {
        pick = i;
        break;
      }
      r -= weights[i];
    }
    if (pick != exclude) return pick;
  }
}

double evaluate(const Objective& objective, const Chromosome& c) {
  const double v = objective(c.genes);
  if (std::isnan(v)) throw ConsistencyError("objective returned NaN");
  return v;
}

}  // namespace

std::string_view to_string(Termination t) {
  return t == Termination::precision ? "precision" : "max_generations";
}

void GaConfig::validate() const {
  if (k_ini < 4 || k_ini % 2 != 0) throw ParameterError("k_ini must be even and >= 4");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)");
  if (!(mu >= 0.0 && mu <= 1.0)) throw ParameterError("mu must lie in [0, 1]");
  if (!(delta > 0.0)) throw ParameterError("delta must be > 0");
}

unsigned GaConfig::survivors() const {
  const auto kept = static_cast<unsigned>(std::lround(epsilon * k_ini));
  return std::clamp(kept, 2u, k_ini);
}

GaResult ga_optimize(const Objective& objective, std::size_t gene_count, const GaConfig& config) {
  config.validate();
  if (gene_count < 1 || gene_count > 2) throw ParameterError("gene_count must be 1 or 2");
  Rng rng(derive_stream_seed(config.seed, 0));

  Population pop;
  pop.members.resize(config.k_ini);
  for (auto& c : pop.members) {
    c.genes.resize(gene_count);
    for (auto& g : c.genes) g = rng.uniform();
    c.fitness = evaluate(objective, c);
  }
  pop.sort_by_fitness();

  GaResult result;
  result.best = pop.members.front();
  result.trace.q_min.push_back(result.best.fitness);

  const unsigned keep = config.survivors();
  std::vector<double> weights(keep);
  for (unsigned t = 1;; ++t) {
    if (t > config.max_generations) {
      result.trace.terminated_by = Termination::max_generations;
      break;
    }

    pop.members.resize(keep);
    for (unsigned i = 0; i < keep; ++i) {
      weights[i] = std::max(0.0, 1.0 - pop.members[i].fitness) + kRouletteFloor;
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

    while (pop.members.size() < config.k_ini) {
      const std::size_t i = roulette(weights, total, rng, keep);
      const std::size_t j = roulette(weights, total, rng, i);
      Chromosome child1 = pop.members[i];
      Chromosome child2 = pop.members[j];
      if (gene_count == 2) {
        std::swap(child1.genes[1], child2.genes[1]);
      } else {
        const double alpha = rng.uniform();
        const double p1 = child1.genes[0];
        const double p2 = child2.genes[0];
        child1.genes[0] = alpha * p1 + (1.0 - alpha) * p2;
        child2.genes[0] = (1.0 - alpha) * p1 + alpha * p2;
      }
      for (Chromosome* child : {&child1, &child2}) {
        if (pop.members.size() >= config.k_ini) break;
        for (auto& g : child->genes) {
          if (rng.uniform() < config.mu) g = rng.uniform();
        }
        child->fitness = evaluate(objective, *child);
        pop.members.push_back(std::move(*child));
      }
    }
    pop.sort_by_fitness();

    const double previous = result.trace.q_min.back();
    const double current = pop.members.front().fitness;
    result.trace.q_min.push_back(current);
    result.trace.generations = t;
    if (current < result.best.fitness) result.best = pop.members.front();
    if (std::abs(previous - current) < config.delta) {
      result.trace.terminated_by = Termination::precision;
      break;
    }
  }
  return result;
}

GaResult ga_optimize(const SystemParams& params, Protocol kind, const GaConfig& config) {
  params.validate();
  if (kind == Protocol::tsncr) {
    return ga_optimize([&](std::span<const double> g) { return outage_tsncr(params, g[0]).probability; }, 1,
                       config);
  }
  return ga_optimize(
      [&](std::span<const double> g) { return outage_tsfpr(params, g[0], g[1]).probability; }, 2, config);
}

GridResult grid_search(const SystemParams& params, Protocol kind, double resolution) {
  params.validate();
  if (!(resolution > 0.0 && resolution <= 0.1)) throw ParameterError("resolution must lie in (0, 0.1]");
  const auto n = static_cast<int>(std::ceil(1.0 / resolution - 1e-9));

  GridResult best;
  best.objective = 2.0;
  for (int i = 0; i <= n; ++i) {
    const double rho = static_cast<double>(i) / n;
    if (kind == Protocol::tsncr) {
      const double v = outage_tsncr(params, rho).probability;
      ++best.evaluations;
      if (v < best.objective) best = {rho, 0.5, v, best.evaluations};
      continue;
    }
    for (int j = 0; j <= n; ++j) {
      const double theta = static_cast<double>(j) / n;
      const double v = outage_tsfpr(params, rho, theta).probability;
      ++best.evaluations;
      if (v < best.objective) best = {rho, theta, v, best.evaluations};
    }
  }
  return best;
}

}  // namespace tsrelay
