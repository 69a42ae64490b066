#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "interlace/config.hpp"
#include "interlace/driving.hpp"
#include "interlace/dynamics.hpp"
#include "interlace/errors.hpp"
#include "interlace/gt_pattern.hpp"
#include "interlace/rescale.hpp"
#include "interlace/stats.hpp"
#include "interlace/warren.hpp"

namespace interlace {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out, std::ios::binary);
  if (!out) throw FormatError("cannot open output file '" + config.out + "'");
  out << text;
}

DrivingPath build_driver(const RunConfig& config) {
  if (!config.driver_file.empty()) {
    std::ifstream in(config.driver_file);
    if (!in) throw FormatError("cannot open driving file '" + config.driver_file + "'");
    return ingest_path(in);
  }
  const DriverKind kind = driver_kind_from_string(config.driver);
  const SeedSpec seed = config.seed_spec();
  switch (kind) {
    case DriverKind::Poisson:
      return poisson_driver(config.levels, config.rate, config.horizon, seed);
    case DriverKind::Bernoulli:
      return bernoulli_driver(config.levels, config.p,
                              static_cast<long long>(config.horizon), seed);
    case DriverKind::Lazy:
      return lazy_walk_driver(config.levels, config.q, static_cast<long long>(config.horizon),
                              seed);
  }
  throw DomainError("unknown driver kind");
}

int cmd_simulate(const RunConfig& config) {
  const DrivingPath driver = build_driver(config);
  const DiscretePattern initial = config.initial.empty()
                                      ? packed_pattern(driver.size)
                                      : parse_discrete_pattern(config.initial);
  const Trajectory traj = run_dynamics(initial, driver, driver.horizon);
  std::ostringstream os;
  write_trajectory_csv(os, traj, {"config " + config_summary(config)});
  write_output(config, os.str());
  return 0;
}

int cmd_warren(const RunConfig& config) {
  const ContinuousPattern initial = config.initial.empty()
                                        ? ContinuousPattern(config.levels)
                                        : parse_continuous_pattern(config.initial);
  std::ostringstream os;
  if (!config.sample_dump) {
    const WarrenTrajectory traj =
        warren_sample(config.levels, initial, config.time, config.grid_step, config.seed_spec());
    write_grid_csv(os, traj, config.stride, {"config " + config_summary(config)});
  } else {
    // Replicated mode: dump the time-T cross-section of each replica.
    std::vector<ContinuousPattern> sections;
    sections.reserve(config.replicas);
    for (std::size_t r = 0; r < config.replicas; ++r) {
      const WarrenTrajectory traj = warren_sample(config.levels, initial, config.time,
                                                  config.grid_step, config.seed_spec().sub(r));
      sections.push_back(traj.cross_section(traj.grid_points() - 1));
    }
    write_sample_dump(os, sections, {"config " + config_summary(config)});
  }
  write_output(config, os.str());
  return 0;
}

int cmd_converge(const RunConfig& config) {
  const DriverKind kind = driver_kind_from_string(config.driver);
  const double param = kind == DriverKind::Poisson  ? config.rate
                       : kind == DriverKind::Bernoulli ? config.p
                                                       : config.q;
  const ConvergenceReport report =
      convergence_pipeline(kind, param, config.n_values, config.levels, config.times,
                           config.replicas, config.seed_spec(), config.grid_step);
  nlohmann::json j = report_to_json(report);
  j["config"] = nlohmann::json::parse(config_summary(config));
  write_output(config, j.dump(2) + "\n");
  return 0;
}

nlohmann::json moments_json(const Moments& m) {
  return {{"mean", m.mean}, {"variance", m.variance}, {"min", m.min},
          {"max", m.max},   {"count", m.count}};
}

int cmd_compare(const RunConfig& config) {
  if (config.input_a.empty() || config.input_b.empty())
    throw DomainError("compare needs input_a and input_b sample dumps");
  std::ifstream fa(config.input_a), fb(config.input_b);
  if (!fa) throw FormatError("cannot open '" + config.input_a + "'");
  if (!fb) throw FormatError("cannot open '" + config.input_b + "'");
  const auto a = read_sample_dump(fa);
  const auto b = read_sample_dump(fb);
  if (a.empty() || b.empty()) throw DomainError("compare: empty sample dump");
  const int n = a.front().size();
  if (b.front().size() != n)
    throw StructuralError("compare: dumps have different pattern sizes");

  nlohmann::json j;
  j["schema"] = "interlace.compare/1";
  j["config"] = nlohmann::json::parse(config_summary(config));
  nlohmann::json slots = nlohmann::json::array();
  for (const LevelIndex s : all_slots(n)) {
    std::vector<double> va, vb;
    va.reserve(a.size());
    vb.reserve(b.size());
    for (const auto& p : a) va.push_back(p.at(s));
    for (const auto& p : b) vb.push_back(p.at(s));
    slots.push_back({{"level", s.level},
                     {"index", s.pos},
                     {"ks", empirical_ks(va, vb)},
                     {"a", moments_json(moment_summary(va))},
                     {"b", moments_json(moment_summary(vb))}});
  }
  j["slots"] = std::move(slots);
  write_output(config, j.dump(2) + "\n");
  return 0;
}

struct FlagSet {
  std::string config_path;
  RunConfig flags;
};

void add_common_flags(CLI::App* cmd, FlagSet& fs) {
  cmd->add_option("--config", fs.config_path, "JSON config file");
  cmd->add_option("--seed", fs.flags.seed, "master seed (64-bit)");
  cmd->add_option("--stream", fs.flags.stream, "seed stream id");
  cmd->add_option("--out", fs.flags.out, "output file (default stdout)");
  cmd->add_option("--levels", fs.flags.levels, "pattern size N");
  cmd->add_option("--driver", fs.flags.driver, "driver kind: poisson|bernoulli|lazy");
  cmd->add_option("--horizon", fs.flags.horizon, "driving horizon (steps for discrete drivers)");
  cmd->add_option("--time", fs.flags.time, "continuum horizon T");
  cmd->add_option("--grid-step", fs.flags.grid_step, "grid step h");
  cmd->add_option("--replicas", fs.flags.replicas, "Monte Carlo replica count");
  cmd->add_option("--stride", fs.flags.stride, "grid CSV down-sampling stride");
  cmd->add_flag("--sample-dump", fs.flags.sample_dump,
                "warren: dump time-T cross-sections of all replicas");
  cmd->add_option("--rate", fs.flags.rate, "poisson clock rate");
  cmd->add_option("--p", fs.flags.p, "bernoulli parameter");
  cmd->add_option("--q", fs.flags.q, "lazy walk parameter");
  cmd->add_option("--initial", fs.flags.initial, "initial pattern (text form)");
  cmd->add_option("--driver-file", fs.flags.driver_file, "event-list CSV driving file");
  cmd->add_option("--times", fs.flags.times, "evaluation times");
  cmd->add_option("--n-values", fs.flags.n_values, "speed-up values n");
  cmd->add_option("--input-a", fs.flags.input_a, "first sample dump");
  cmd->add_option("--input-b", fs.flags.input_b, "second sample dump");
}

// Config file first, then any flag that was actually given overrides it.
RunConfig resolve_config(CLI::App* cmd, const FlagSet& fs, const std::string& command) {
  RunConfig config;
  if (!fs.config_path.empty()) {
    config = load_config(read_file(fs.config_path));
  }
  config.command = command;

  auto set_if = [&](const char* flag, auto member) {
    if (cmd->count(flag) > 0) config.*member = fs.flags.*member;
  };
  set_if("--seed", &RunConfig::seed);
  set_if("--stream", &RunConfig::stream);
  set_if("--out", &RunConfig::out);
  set_if("--levels", &RunConfig::levels);
  set_if("--driver", &RunConfig::driver);
  set_if("--horizon", &RunConfig::horizon);
  set_if("--time", &RunConfig::time);
  set_if("--grid-step", &RunConfig::grid_step);
  set_if("--replicas", &RunConfig::replicas);
  set_if("--stride", &RunConfig::stride);
  set_if("--sample-dump", &RunConfig::sample_dump);
  set_if("--rate", &RunConfig::rate);
  set_if("--p", &RunConfig::p);
  set_if("--q", &RunConfig::q);
  set_if("--initial", &RunConfig::initial);
  set_if("--driver-file", &RunConfig::driver_file);
  set_if("--times", &RunConfig::times);
  set_if("--n-values", &RunConfig::n_values);
  set_if("--input-a", &RunConfig::input_a);
  set_if("--input-b", &RunConfig::input_b);

  validate_config(config);
  return config;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CLI::App app{"Interlacing particle dynamics and their Brownian scaling limit"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Sub subs[] = {
      {"simulate", "run the driven block/push dynamics, write a trajectory CSV", cmd_simulate},
      {"warren", "sample the reflected interlacing Brownian system on a grid", cmd_warren},
      {"converge", "diffusive-rescaling convergence report (JSON)", cmd_converge},
      {"compare", "KS/moment report between two sample dumps (JSON)", cmd_compare},
  };

  std::vector<FlagSet> flag_sets(std::size(subs));
  std::vector<CLI::App*> cmds;
  for (std::size_t k = 0; k < std::size(subs); ++k) {
    CLI::App* cmd = app.add_subcommand(subs[k].name, subs[k].help);
    add_common_flags(cmd, flag_sets[k]);
    cmds.push_back(cmd);
  }

  // CLI11 wants argv-style input, reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (std::size_t k = 0; k < std::size(subs); ++k) {
    if (!cmds[k]->parsed()) continue;
    try {
      const RunConfig config = resolve_config(cmds[k], flag_sets[k], subs[k].name);
      return subs[k].run(config);
    } catch (const DomainError& e) {
      std::cerr << "interlace: domain error: " << e.what() << '\n';
    } catch (const FormatError& e) {
      std::cerr << "interlace: format error: " << e.what() << '\n';
    } catch (const RegularityError& e) {
      std::cerr << "interlace: regularity error: " << e.what() << '\n';
    } catch (const StructuralError& e) {
      std::cerr << "interlace: structural error: " << e.what() << '\n';
    } catch (const std::exception& e) {
      std::cerr << "interlace: " << e.what() << '\n';
    }
    return 1;
  }
  return 1;
}

}  // namespace interlace
