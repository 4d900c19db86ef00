#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "alpha_channel/errors.hpp"
#include "commands.hpp"
#include "config.hpp"

using namespace alpha_channel;
using namespace alpha_channel::cli;

namespace {

RunConfig config(const std::vector<std::string>& overrides = {}) {
  auto doc = default_document();
  for (const auto& o : overrides) apply_override(doc, o);
  return config_from_document(doc);
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run(const std::string& command, const RunConfig& cfg, const std::string& dir = "") {
  std::ostringstream out, err;
  const Io io{out, err, dir, false};
  const int code = run_command(command, cfg, io);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("defaults load and validate") {
  const auto cfg = config();
  CHECK(cfg.geometry.height() == 1.0);
  CHECK(cfg.pressure.p10 == -1.0);
  CHECK(cfg.kernel.tail_tol == 1e-10);
  CHECK(cfg.roughness.n_max == 2037);
  CHECK(cfg.hash().size() == 16);
}

TEST_CASE("unknown keys and type changes are rejected") {
  auto doc = default_document();
  CHECK_THROWS_AS(merge_checked(doc, nlohmann::json{{"geometry", {{"height", 2.0}}}}), ValidationError);
  CHECK_THROWS_AS(merge_checked(doc, nlohmann::json{{"extra", 1}}), ValidationError);
  CHECK_THROWS_AS(merge_checked(doc, nlohmann::json{{"geometry", {{"h", "tall"}}}}), ValidationError);
  CHECK_THROWS_AS(apply_override(doc, "geometry.h"), ValidationError);
  CHECK_THROWS_AS(apply_override(doc, "geometry..h=1"), ValidationError);
}

TEST_CASE("dotted overrides") {
  auto doc = default_document();
  apply_override(doc, "kernel.tail_tol=1e-12");
  apply_override(doc, "pressure.type=sinusoid");
  apply_override(doc, "run.t_list=[0.5, 1]");
  CHECK(doc["kernel"]["tail_tol"].get<double>() == 1e-12);
  CHECK(doc["pressure"]["type"].get<std::string>() == "sinusoid");
  CHECK(doc["run"]["t_list"].size() == 2);
}

TEST_CASE("hash follows the document") {
  CHECK(config().hash() == config().hash());
  CHECK(config().hash() != config({"geometry.h=2"}).hash());
}

TEST_CASE("invalid settings are validation errors") {
  CHECK_THROWS_AS(config({"roughness.h1=0.5"}), ValidationError);
  CHECK_THROWS_AS(config({"pressure.p10=0.5"}), ValidationError);
  CHECK_THROWS_AS(config({"pressure.type=square"}), ValidationError);
  CHECK_THROWS_AS(config({"output.precision=18"}), ValidationError);
  CHECK_THROWS_AS(config({"run.initial=cold"}), ValidationError);
  CHECK_THROWS_AS(config({"kernel.k_max=1.5"}), ValidationError);
}

TEST_CASE("load_config reads files") {
  const auto dir = std::filesystem::temp_directory_path() / "alpha_channel_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "c.json").string();
  std::ofstream(path) << R"({"fluid": {"nu": 0.5}})";
  CHECK(load_config(path, {"geometry.h=2"}).fluid.nu() == 0.5);
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_config(path, {}), ValidationError);
  CHECK_THROWS_AS(load_config((dir / "missing.json").string(), {}), ValidationError);
}

TEST_CASE("kernel command") {
  const auto r = run("kernel", config());
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("# alpha-channel kernel\n# config_hash=", 0) == 0);
  CHECK(r.out.find("\nx,t,K,time_integral_series,time_integral_closed,heat_residual\n") !=
        std::string::npos);
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK_THROWS_AS(run("kernel", config({"run.t_list=[1e-9]"})), ValidationError);
  const auto empty = run("kernel", config({"run.t_list=[]"}));
  CHECK(empty.code == kExitOk);
  CHECK(empty.out.ends_with("\nx,t,K,time_integral_series,time_integral_closed,heat_residual\n"));
}

TEST_CASE("kernel command is byte-identical across runs") {
  CHECK(run("kernel", config()).out == run("kernel", config()).out);
}

TEST_CASE("evolve command") {
  CHECK(run("evolve", config()).code == kExitOk);
  CHECK(run("evolve", config({"pressure.type=sinusoid", "pressure.amplitude=0.5",
                              "pressure.p_bar=1.5"}))
            .code == kExitOk);
  const auto zero = run("evolve", config({"run.t_end=0", "run.grid_points=5"}));
  CHECK(zero.code == kExitOk);
  std::istringstream lines(zero.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) rows += (line[0] != '#') ? 1 : 0;
  CHECK(rows == 6);
  CHECK(run("evolve", config({"run.tolerance=1e-20"})).code == kExitTolerance);
}

TEST_CASE("poiseuille and bound commands") {
  CHECK(run("poiseuille", config()).code == kExitOk);
  const auto b = run("bound", config());
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("0.10132118364233778") != std::string::npos);
  CHECK(run("bound", config({"pressure.p10=-2", "pressure.p_bar=2"})).out.find("satisfied  true") !=
        std::string::npos);
}

TEST_CASE("roughness command") {
  CHECK(run("roughness", config()).code == kExitOk);
  CHECK_THROWS_AS(run("roughness", config({"run.k_list=[3, 4]"})), ValidationError);
  CHECK(run("roughness", config({"roughness.h1=0.01"})).code == kExitTolerance);
  const auto unit_alpha =
      run("roughness", config({"roughness.c1=9.869604401089358", "roughness.delta1=0.5",
                               "roughness.delta2=0.5", "roughness.n1=1", "roughness.n2=1",
                               "geometry.pi1=4", "geometry.pi2=4", "run.k_list=[1]"}));
  CHECK(unit_alpha.out.find("alpha                1\n") != std::string::npos);
}

TEST_CASE("alpha and profiles commands") {
  CHECK(run("alpha", config()).code == kExitOk);
  CHECK(run("alpha", config({"roughness.h1=0.01"})).code == kExitTolerance);
  CHECK(run("profiles", config()).code == kExitOk);
}

TEST_CASE("CSV files land in the output directory") {
  const auto dir = std::filesystem::temp_directory_path() / "alpha_channel_cli_out";
  std::filesystem::remove_all(dir);
  const auto r = run("bound", config(), dir.string());
  CHECK(r.code == kExitOk);
  CHECK(std::filesystem::exists(dir / "bound.csv"));
}

TEST_CASE("unknown command") { CHECK_THROWS_AS(run("plot", config()), ValidationError); }
