#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "interlace/config.hpp"
#include "interlace/errors.hpp"

using namespace interlace;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "interlace-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir / name;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path);
  os << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream is(path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

struct CerrCapture {
  std::ostringstream buffer;
  std::streambuf* saved;
  CerrCapture() : saved(std::cerr.rdbuf(buffer.rdbuf())) {}
  ~CerrCapture() { std::cerr.rdbuf(saved); }
};

}  // namespace

TEST_CASE("config parsing fills defaults and rejects bad input") {
  const auto config = load_config(R"({"N": 3, "seed": 7})");
  CHECK(config.levels == 3);
  CHECK(config.seed == 7);
  CHECK(config.driver == "poisson");
  CHECK(config.rate == 1.0);
  CHECK(config.grid_step == 1e-3);
  CHECK(config.replicas == 1000);
  CHECK(config.seed_spec().master == 7);
  CHECK(config.seed_spec().stream == 0);

  CHECK_THROWS_AS(load_config(R"({"N": 0})"), DomainError);
  CHECK_THROWS_AS(load_config(R"({"N": "three"})"), FormatError);
  CHECK_THROWS_AS(load_config("not json"), FormatError);
  try {
    load_config(R"({"ratee": 2.0})");
    FAIL("unknown key accepted");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("ratee") != std::string::npos);
  }
}

TEST_CASE("simulate writes a trajectory with the config echoed") {
  const auto out = temp_file("sim.csv");
  const int rc = run_command({"simulate", "--levels", "3", "--driver", "poisson", "--horizon",
                              "4", "--seed", "11", "--out", out.string()});
  REQUIRE(rc == 0);
  const std::string text = read_text(out);
  CHECK(text.rfind("# config {", 0) == 0);
  CHECK(text.find("time,level,index,value") != std::string::npos);
  // The time-0 packed state is always present.
  CHECK(text.find("0,1,1,0") != std::string::npos);
}

TEST_CASE("converge output is byte-identical across runs") {
  const auto out_a = temp_file("conv_a.json");
  const auto out_b = temp_file("conv_b.json");
  const std::vector<std::string> base{"converge", "--levels", "2",      "--driver",
                                      "poisson",  "--n-values", "4",    "--times", "0.5",
                                      "--replicas", "30",      "--grid-step", "0.01",
                                      "--seed",   "13"};
  auto with_out = [&](const fs::path& p) {
    auto args = base;
    args.push_back("--out");
    args.push_back(p.string());
    return args;
  };
  REQUIRE(run_command(with_out(out_a)) == 0);
  REQUIRE(run_command(with_out(out_b)) == 0);
  const std::string text = read_text(out_a);
  CHECK(text == read_text(out_b));

  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "interlace.convergence/1");
  CHECK(j["entries"].size() == 3);
  CHECK(j.contains("config"));
}

TEST_CASE("malformed driving file fails with a regularity diagnostic") {
  const auto bad = temp_file("bad_driver.csv");
  write_text(bad,
             "# horizon 2\n"
             "# init 1 1 0\n"
             "time,level,index,increment\n"
             "1,1,1,2\n");
  CerrCapture capture;
  const int rc = run_command({"simulate", "--levels", "1", "--driver-file", bad.string(),
                              "--horizon", "2", "--out", temp_file("bad_out.csv").string()});
  CHECK(rc != 0);
  CHECK(capture.buffer.str().find("regularity error") != std::string::npos);
}

TEST_CASE("warren sample dumps feed the compare command") {
  const auto dump_a = temp_file("warren_a.csv");
  const auto dump_b = temp_file("warren_b.csv");
  const auto report_path = temp_file("compare.json");
  for (auto [path, seed] : {std::pair{&dump_a, "21"}, std::pair{&dump_b, "22"}}) {
    const int rc = run_command({"warren", "--levels", "2", "--time", "0.5", "--grid-step",
                                "0.01", "--replicas", "40", "--sample-dump", "--seed", seed,
                                "--out", path->string()});
    REQUIRE(rc == 0);
  }
  const int rc = run_command({"compare", "--input-a", dump_a.string(), "--input-b",
                              dump_b.string(), "--out", report_path.string()});
  REQUIRE(rc == 0);
  const auto j = nlohmann::json::parse(read_text(report_path));
  CHECK(j["schema"] == "interlace.compare/1");
  REQUIRE(j["slots"].size() == 3);
  for (const auto& entry : j["slots"]) {
    CHECK(entry["ks"].get<double>() >= 0.0);
    CHECK(entry["ks"].get<double>() <= 1.0);
  }
}

TEST_CASE("bad command-line input is reported, not thrown") {
  CerrCapture capture;
  CHECK(run_command({"simulate", "--levels", "0", "--horizon", "1"}) != 0);
  CHECK(capture.buffer.str().find("domain error") != std::string::npos);
  CHECK(run_command({"no-such-command"}) != 0);
}
