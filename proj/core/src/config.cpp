#include "interlace/config.hpp"

#include <nlohmann/json.hpp>
#include <set>

#include "interlace/errors.hpp"

namespace interlace {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands = {"simulate", "warren", "converge", "compare"};
const std::set<std::string> kDrivers = {"poisson", "bernoulli", "lazy"};

template <typename T>
void read_key(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) {
    try {
      out = it->get<T>();
    } catch (const json::exception&) {
      throw FormatError(std::string("config key '") + key + "': wrong type");
    }
  }
}

}  // namespace

RunConfig load_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("config: top level must be a JSON object");

  static const std::set<std::string> known = {
      "command", "driver",  "N",       "horizon",  "time",    "rate",    "p",
      "q",       "grid_step", "replicas", "stride", "sample_dump", "seed", "stream", "n_values",
      "times",   "out",     "driver_file", "initial", "input_a", "input_b"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw FormatError("config: unknown key '" + key + "'");

  RunConfig config;
  read_key(j, "command", config.command);
  read_key(j, "driver", config.driver);
  read_key(j, "N", config.levels);
  read_key(j, "horizon", config.horizon);
  read_key(j, "time", config.time);
  read_key(j, "rate", config.rate);
  read_key(j, "p", config.p);
  read_key(j, "q", config.q);
  read_key(j, "grid_step", config.grid_step);
  read_key(j, "replicas", config.replicas);
  read_key(j, "stride", config.stride);
  read_key(j, "sample_dump", config.sample_dump);
  read_key(j, "seed", config.seed);
  read_key(j, "stream", config.stream);
  read_key(j, "n_values", config.n_values);
  read_key(j, "times", config.times);
  read_key(j, "out", config.out);
  read_key(j, "driver_file", config.driver_file);
  read_key(j, "initial", config.initial);
  read_key(j, "input_a", config.input_a);
  read_key(j, "input_b", config.input_b);

  validate_config(config);
  return config;
}

void validate_config(const RunConfig& config) {
  // Empty command = "not chosen yet": a config file may omit it and let the
  // subcommand fill it in.
  if (!config.command.empty() && !kCommands.count(config.command))
    throw DomainError("config: command must be one of simulate|warren|converge|compare, got '" +
                      config.command + "'");
  if (!kDrivers.count(config.driver))
    throw DomainError("config: driver must be one of poisson|bernoulli|lazy, got '" +
                      config.driver + "'");
  if (config.levels < 1) throw DomainError("config: N must be >= 1");
  if (config.horizon < 0.0) throw DomainError("config: horizon must be >= 0");
  if (config.time < 0.0) throw DomainError("config: time must be >= 0");
  if (config.rate <= 0.0) throw DomainError("config: rate must be > 0");
  if (config.p < 0.0 || config.p > 1.0) throw DomainError("config: p must lie in [0, 1]");
  if (config.q < 0.0 || config.q > 0.5) throw DomainError("config: q must lie in [0, 1/2]");
  if (config.grid_step <= 0.0) throw DomainError("config: grid_step must be > 0");
  if (config.replicas == 0) throw DomainError("config: replicas must be >= 1");
  if (config.stride == 0) throw DomainError("config: stride must be >= 1");
  for (double n : config.n_values)
    if (n < 1.0) throw DomainError("config: n_values entries must be >= 1");
  for (double t : config.times)
    if (t < 0.0) throw DomainError("config: times entries must be >= 0");
}

std::string config_summary(const RunConfig& config) {
  json j = {{"command", config.command}, {"driver", config.driver},   {"N", config.levels},
            {"horizon", config.horizon}, {"time", config.time},       {"rate", config.rate},
            {"p", config.p},             {"q", config.q},             {"grid_step", config.grid_step},
            {"replicas", config.replicas}, {"stride", config.stride},
            {"sample_dump", config.sample_dump}, {"seed", config.seed},
            {"stream", config.stream},   {"n_values", config.n_values}, {"times", config.times}};
  if (!config.driver_file.empty()) j["driver_file"] = config.driver_file;
  if (!config.initial.empty()) j["initial"] = config.initial;
  if (!config.input_a.empty()) j["input_a"] = config.input_a;
  if (!config.input_b.empty()) j["input_b"] = config.input_b;
  return j.dump();
}

}  // namespace interlace
