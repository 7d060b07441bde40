#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsrelay/montecarlo.hpp"
#include "tsrelay/optimizer.hpp"
#include "tsrelay/params.hpp"

namespace tsrelay {

/// One swept variable with its explicit list of values.
struct SweepAxis {
  std::string variable;
  std::vector<double> values;
};

/// Variables a sweep may drive.
inline constexpr std::string_view kSweepVariables[] = {"rho", "theta", "d1", "d2", "P1", "P2", "R0", "m", "eta"};

/// Writes `value` into the field named `variable` (params field, or rho / theta of `config`).
void apply_variable(std::string_view variable, double value, SystemParams& params, ProtocolConfig& config);

enum class ProtocolSelection { tsncr, tsfpr, both };

std::vector<Protocol> protocols_of(ProtocolSelection sel);

/// Everything a figure run needs. Parsed from a JSON file in which every field is optional:
///
/// {
///   "protocol": "tsncr" | "tsfpr" | "both",
///   "params": {"P1", "P2", "d1", "d2", "m", "eta", "R0", "T", "B",
///              "noise": {"relay_antenna": [x, y], "relay_conversion": [..],
///                        "user_antenna": [..], "user_conversion": [..]},
///              "fading": {"lambda_h1", "lambda_h2", "lambda_f1", "lambda_f2"}},
///   "rho": 0.19, "theta": 0.5,
///   "sweep": [{"variable": "rho", "start": 0, "stop": 1, "step": 0.05}
///             | {"variable": "theta", "values": [..]}],
///   "mc": {"samples": N, "seed": S, "workers": W},
///   "ga": {"k_ini", "epsilon", "mu", "delta", "max_generations", "seed"},
///   "grid_resolution": 0.01
/// }
///
/// A missing sweep or sample count falls back to the figure's default.
struct Scenario {
  SystemParams params;
  ProtocolSelection protocols = ProtocolSelection::both;
  double rho = 0.19;
  double theta = 0.5;
  std::vector<SweepAxis> sweep;
  /// Monte Carlo sample count; 0 disables sampling. Unset means figure default.
  std::optional<std::uint64_t> mc_samples;
  std::uint64_t mc_seed = 1;
  unsigned mc_workers = 1;
  GaConfig ga;
  double grid_resolution = 0.01;

  static Scenario parse(std::string_view json_text);
  static Scenario load(const std::filesystem::path& path);
  /// Fully resolved scenario as pretty-printed JSON (all defaults written out).
  std::string to_json() const;

  /// Checks parameters, sweep domains and optimizer settings.
  void validate() const;

  McConfig mc_config(std::uint64_t samples) const;
};

/// Values start, start + step, ..., stop (inclusive, rounded to 1e-12).
std::vector<double> linspace_step(double start, double stop, double step);

}  // namespace tsrelay
