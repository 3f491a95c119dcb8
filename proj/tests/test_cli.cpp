#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = anomaly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--theorem", "3.1", "--k", "2", "--l", "2"}).code == 0);
  CHECK(run({"verify", "--theorem", "4.8", "--k", "1", "--l", "2"}).code == 0);
  CHECK(run({"verify", "--theorem", "3.3", "--l", "3", "--qorder", "6"}).code == 1);
  CHECK(run({"verify", "--theorem", "3.1", "--k", "0", "--l", "1"}).code == 2);
  CHECK(run({"verify", "--theorem", "3.1", "--k", "3", "--l", "1", "--qorder", "3"}).code == 2);
  CHECK(run({"verify", "--theorem", "7.7"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("verify writes parseable JSON by default") {
  const auto r = run({"verify", "--theorem", "4.2", "--k", "1", "--l", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "PASS");
  CHECK(j["h"][0].contains("normalized"));
}

TEST_CASE("verify text output and timings flag") {
  const auto r = run({"verify", "--theorem", "3.2", "--k", "1", "--l", "1", "--format", "text", "--timings"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find(" s\n") != std::string::npos);
}

TEST_CASE("expand objects") {
  auto text_of = [](const Result& r) { return nlohmann::json::parse(r.out)["text"].get<std::string>(); };
  const auto d1 = run({"expand", "--object", "delta1", "--order", "10"});
  CHECK(d1.code == 0);
  CHECK(text_of(d1).rfind("1/4 + 6*q + 6*q^2", 0) == 0);
  const auto e2 = run({"expand", "--object", "eps2", "--order", "4"});
  CHECK(e2.code == 0);
  CHECK(text_of(e2).rfind("q^(1/2) + 8*q", 0) == 0);
  const auto t3 = run({"expand", "--object", "theta3-null", "--order", "8"});
  CHECK(text_of(t3).rfind("1 + 2*q^(1/2)", 0) == 0);
  const auto table = run({"expand", "--object", "delta2", "--order", "1", "--format", "text"});
  CHECK(table.out.find("q^1/2  -3") != std::string::npos);
  CHECK(run({"expand", "--object", "factor-A", "--order", "2", "--zbound", "4"}).code == 0);
  CHECK(run({"expand", "--object", "P2", "--setting", "spin4k", "--k", "2", "--l", "1"}).code == 0);
  CHECK(run({"expand", "--object", "nonsense"}).code == 2);
}

TEST_CASE("decompose and audit commands") {
  CHECK(run({"decompose", "--setting", "spinc4k", "--k", "2", "--l", "1"}).code == 0);
  CHECK(run({"audit", "--corollary", "3.6", "--m", "1"}).code == 0);
  CHECK(run({"audit", "--corollary", "4.9", "--m", "1"}).code == 1);
  CHECK(run({"audit", "--corollary", "3.6", "--m", "1", "--l", "3"}).code == 2);
}

TEST_CASE("suite guards the truncation order") {
  const auto r = run({"suite", "--qorder", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("trunc") != std::string::npos);
}

TEST_CASE("suite output is identical across parallelism levels") {
  const auto serial = run({"suite"});
  const auto parallel = run({"suite", "--parallel", "4"});
  CHECK(serial.out == parallel.out);
  CHECK(serial.code == parallel.code);
  CHECK(serial.out.find("4.9") != std::string::npos);
}

TEST_CASE("suite writes per-case reports") {
  const auto dir = std::filesystem::temp_directory_path() / "anomaly-suite-test";
  std::filesystem::remove_all(dir);
  run({"suite", "--output", dir.string()});
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  CHECK(files == anomaly::cli::default_grid().size());
  std::filesystem::remove_all(dir);
}

}
