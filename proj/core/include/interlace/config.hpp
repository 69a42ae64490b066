#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interlace/rng.hpp"

namespace interlace {

// One run of the command-line tool. Flags mirror these keys one-to-one; a
// flag overrides the config-file value.
struct RunConfig {
  std::string command;             // simulate | warren | converge | compare
  std::string driver = "poisson";  // poisson | bernoulli | lazy
  int levels = 1;                  // N
  double horizon = 0.0;            // simulate: driving horizon (steps for discrete drivers)
  double time = 1.0;               // warren/converge: continuum horizon T
  double rate = 1.0;
  double p = 0.5;
  double q = 0.25;
  double grid_step = 1e-3;
  std::size_t replicas = 1000;
  std::size_t stride = 1;
  bool sample_dump = false;  // warren: dump time-T cross-sections of `replicas` runs
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::vector<double> n_values = {25.0, 100.0, 400.0};
  std::vector<double> times = {1.0};
  std::string out;          // output file; empty = stdout
  std::string driver_file;  // simulate: ingest this event list instead of generating
  std::string initial;      // pattern text form; empty = packed / zeros
  std::string input_a;      // compare inputs
  std::string input_b;

  SeedSpec seed_spec() const { return SeedSpec{seed, stream}; }
};

// Parses the JSON config. Unknown keys are rejected (error names the key);
// out-of-range values raise a validation error. Defaults as above.
RunConfig load_config(const std::string& json_text);

// Range checks shared by the config parser and the flag layer.
void validate_config(const RunConfig& config);

// JSON echo of a config, embedded in every output file.
std::string config_summary(const RunConfig& config);

// Entry point of the command-line tool. Returns the process exit status.
int run_command(const std::vector<std::string>& args);

}  // namespace interlace
