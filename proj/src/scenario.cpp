#include "tsrelay/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "tsrelay/errors.hpp"

namespace tsrelay {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::initializer_list<std::string_view> known, const std::string& where) {
  if (!j.is_object()) throw ParameterError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ParameterError("unknown field '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void read_pair(const json& j, const char* key, std::array<double, 2>& out) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  if (v.is_number()) {
    out = {v.get<double>(), v.get<double>()};
  } else {
    const auto arr = v.get<std::vector<double>>();
    if (arr.size() != 2) throw ParameterError(std::string("noise field '") + key + "' needs two values");
    out = {arr[0], arr[1]};
  }
}

SweepAxis parse_axis(const json& j) {
  check_keys(j, {"variable", "values", "start", "stop", "step"}, "sweep");
  SweepAxis axis;
  axis.variable = j.at("variable").get<std::string>();
  if (j.contains("values")) {
    axis.values = j.at("values").get<std::vector<double>>();
  } else {
    axis.values = linspace_step(j.at("start").get<double>(), j.at("stop").get<double>(), j.at("step").get<double>());
  }
  return axis;
}

SystemParams parse_params(const json& j, SystemParams p) {
  check_keys(j, {"P1", "P2", "d1", "d2", "m", "eta", "R0", "T", "B", "noise", "fading"}, "params");
  read(j, "P1", p.P1);
  read(j, "P2", p.P2);
  read(j, "d1", p.d1);
  read(j, "d2", p.d2);
  read(j, "m", p.m);
  read(j, "eta", p.eta);
  read(j, "R0", p.R0);
  read(j, "T", p.T);
  read(j, "B", p.bandwidth);
  if (j.contains("noise")) {
    const auto& n = j.at("noise");
    check_keys(n, {"relay_antenna", "relay_conversion", "user_antenna", "user_conversion"}, "params.noise");
    read_pair(n, "relay_antenna", p.noise.relay_antenna);
    read_pair(n, "relay_conversion", p.noise.relay_conversion);
    read_pair(n, "user_antenna", p.noise.user_antenna);
    read_pair(n, "user_conversion", p.noise.user_conversion);
  }
  if (j.contains("fading")) {
    const auto& f = j.at("fading");
    check_keys(f, {"lambda_h1", "lambda_h2", "lambda_f1", "lambda_f2"}, "params.fading");
    read(f, "lambda_h1", p.fading.lambda_h1);
    read(f, "lambda_h2", p.fading.lambda_h2);
    read(f, "lambda_f1", p.fading.lambda_f1);
    read(f, "lambda_f2", p.fading.lambda_f2);
  }
  return p;
}

std::string_view selection_name(ProtocolSelection s) {
  switch (s) {
    case ProtocolSelection::tsncr:
      return "tsncr";
    case ProtocolSelection::tsfpr:
      return "tsfpr";
    case ProtocolSelection::both:
      return "both";
  }
  return "both";
}

}  // namespace

std::vector<Protocol> protocols_of(ProtocolSelection sel) {
  switch (sel) {
    case ProtocolSelection::tsncr:
      return {Protocol::tsncr};
    case ProtocolSelection::tsfpr:
      return {Protocol::tsfpr};
    case ProtocolSelection::both:
      break;
  }
  return {Protocol::tsncr, Protocol::tsfpr};
}

void apply_variable(std::string_view variable, double value, SystemParams& params, ProtocolConfig& config) {
  if (variable == "rho") {
    config.rho = value;
  } else if (variable == "theta") {
    config.theta = value;
  } else if (variable == "d1") {
    params.d1 = value;
  } else if (variable == "d2") {
    params.d2 = value;
  } else if (variable == "P1") {
    params.P1 = value;
  } else if (variable == "P2") {
    params.P2 = value;
  } else if (variable == "R0") {
    params.R0 = value;
  } else if (variable == "m") {
    params.m = value;
  } else if (variable == "eta") {
    params.eta = value;
  } else {
    throw ParameterError("unknown sweep variable '" + std::string(variable) + "'");
  }
}

std::vector<double> linspace_step(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw ParameterError("sweep needs finite start <= stop and step > 0");
  }
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  if (n > 1'000'000) throw ParameterError("sweep has too many points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

Scenario Scenario::parse(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw IoError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw IoError("scenario must be a JSON object");

  Scenario s;
  check_keys(j, {"protocol", "params", "rho", "theta", "sweep", "mc", "ga", "grid_resolution"}, "scenario");
  try {
    if (j.contains("protocol")) {
      const auto name = j.at("protocol").get<std::string>();
      if (name == "both") {
        s.protocols = ProtocolSelection::both;
      } else {
        s.protocols = protocol_from_string(name) == Protocol::tsncr ? ProtocolSelection::tsncr
                                                                    : ProtocolSelection::tsfpr;
      }
    }
    if (j.contains("params")) s.params = parse_params(j.at("params"), s.params);
    read(j, "rho", s.rho);
    read(j, "theta", s.theta);
    if (j.contains("sweep")) {
      const auto& sw = j.at("sweep");
      if (sw.is_array()) {
        for (const auto& axis : sw) s.sweep.push_back(parse_axis(axis));
      } else {
        s.sweep.push_back(parse_axis(sw));
      }
    }
    if (j.contains("mc")) {
      const auto& mc = j.at("mc");
      check_keys(mc, {"samples", "seed", "workers"}, "mc");
      if (mc.contains("samples")) s.mc_samples = mc.at("samples").get<std::uint64_t>();
      read(mc, "seed", s.mc_seed);
      read(mc, "workers", s.mc_workers);
    }
    if (j.contains("ga")) {
      const auto& ga = j.at("ga");
      check_keys(ga, {"k_ini", "epsilon", "mu", "delta", "max_generations", "seed"}, "ga");
      read(ga, "k_ini", s.ga.k_ini);
      read(ga, "epsilon", s.ga.epsilon);
      read(ga, "mu", s.ga.mu);
      read(ga, "delta", s.ga.delta);
      read(ga, "max_generations", s.ga.max_generations);
      read(ga, "seed", s.ga.seed);
    }
    read(j, "grid_resolution", s.grid_resolution);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed scenario field: ") + e.what());
  }
  return s;
}

Scenario Scenario::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  } catch (const ParameterError& e) {
    throw ParameterError(path.string() + ": " + e.what());
  }
}

std::string Scenario::to_json() const {
  const auto& p = params;
  json j;
  j["protocol"] = selection_name(protocols);
  j["params"] = {
      {"P1", p.P1}, {"P2", p.P2}, {"d1", p.d1}, {"d2", p.d2}, {"m", p.m}, {"eta", p.eta},
      {"R0", p.R0}, {"T", p.T}, {"B", p.bandwidth},
      {"noise",
       {{"relay_antenna", p.noise.relay_antenna},
        {"relay_conversion", p.noise.relay_conversion},
        {"user_antenna", p.noise.user_antenna},
        {"user_conversion", p.noise.user_conversion}}},
      {"fading",
       {{"lambda_h1", p.fading.lambda_h1},
        {"lambda_h2", p.fading.lambda_h2},
        {"lambda_f1", p.fading.lambda_f1},
        {"lambda_f2", p.fading.lambda_f2}}},
  };
  j["rho"] = rho;
  j["theta"] = theta;
  j["sweep"] = json::array();
  for (const auto& axis : sweep) j["sweep"].push_back({{"variable", axis.variable}, {"values", axis.values}});
  j["mc"] = {{"seed", mc_seed}, {"workers", mc_workers}};
  if (mc_samples) j["mc"]["samples"] = *mc_samples;
  j["ga"] = {{"k_ini", ga.k_ini}, {"epsilon", ga.epsilon}, {"mu", ga.mu},
             {"delta", ga.delta}, {"max_generations", ga.max_generations}, {"seed", ga.seed}};
  j["grid_resolution"] = grid_resolution;
  return j.dump(2) + "\n";
}

void Scenario::validate() const {
  params.validate();
  ProtocolConfig base{Protocol::tsncr, rho, theta};
  base.validate();
  if (sweep.size() > 2) throw ParameterError("at most two sweep variables are supported");
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const auto& axis = sweep[i];
    if (axis.values.empty()) throw ParameterError("sweep over '" + axis.variable + "' has no values");
    if (i == 1 && axis.variable == sweep[0].variable) throw ParameterError("sweep variables must differ");
    for (double v : axis.values) {
      SystemParams p = params;
      ProtocolConfig c = base;
      apply_variable(axis.variable, v, p, c);
      try {
        p.validate();
        c.validate();
      } catch (const ParameterError& e) {
        throw ParameterError("sweep value " + std::to_string(v) + " for '" + axis.variable + "': " + e.what());
      }
    }
  }
  if (mc_workers < 1) throw ParameterError("mc.workers must be >= 1");
  ga.validate();
  if (!(grid_resolution > 0.0 && grid_resolution <= 0.1)) {
    throw ParameterError("grid_resolution must lie in (0, 0.1]");
  }
}

McConfig Scenario::mc_config(std::uint64_t samples) const {
  McConfig mc;
  mc.n_samples = samples;
  mc.seed = mc_seed;
  mc.workers = mc_workers;
  return mc;
}

}  // namespace tsrelay
