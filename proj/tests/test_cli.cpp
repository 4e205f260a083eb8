#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef OPWLAB_CLI
#error "OPWLAB_CLI must name the command-line binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(OPWLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_input(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("opwlab_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

nlohmann::json run_json(const std::string& args, int expected_code = 0) {
  Run r = run("--json - " + args);
  CHECK(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

const std::string k3 = "3 3\n0 1\n1 2\n0 2\n";
const std::string star = "4 3\n0 1\n0 2\n0 3\n";
const std::string k4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const std::string hexagon = "mop 6\n0 2\n2 4\n0 4\n";

}  // namespace

TEST_CASE("pw") {
  auto j = run_json("--input " + write_input("k3", k3) + " pw");
  CHECK(j["command"] == "pw");
  CHECK(j["results"]["width"] == 2);

  j = run_json("--input " + write_input("star", star) + " pw --anchor 1");
  CHECK(j["results"]["anchored"] == 1);

  j = run_json("--input " + write_input("hexagon", hexagon) + " pw --engine both");
  CHECK(j["results"]["width"] == 3);
  CHECK(j["passed"] == true);

  Run text = run("--input " + write_input("k3b", k3) + " pw");
  CHECK(text.code == 0);
  CHECK_FALSE(text.out.empty());
}

TEST_CASE("stdin and DOT output") {
  const std::string dot = (fs::temp_directory_path() / "opwlab_cli_out.dot").string();
  fs::remove(dot);
  Run r = run("--input - --dot " + dot + " pw < " + write_input("k3c", k3));
  CHECK(r.code == 0);
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("graph") != std::string::npos);
}

TEST_CASE("extract") {
  auto j = run_json("--input " + write_input("hex2", hexagon) + " extract --k 2");
  CHECK(j["results"]["selected_count"].get<int>() >= 5);
  j = run_json("--input random-mop:40 --seed 3 extract --k 1");
  CHECK(j["results"]["selected_count"].get<int>() >= 16);

  CHECK(run("--input " + write_input("k4", k4) + " extract --k 2").code == 2);
  CHECK(run("--input " + write_input("hex3", hexagon) + " extract --k 3").code == 2);
}

TEST_CASE("mk, enum, ik, witness") {
  auto j = run_json("mk --k 2 --cap 8");
  CHECK(j["results"]["status"] == "exact");
  CHECK(j["results"]["value"] == 5);

  j = run_json("enum --n 6 --iso");
  CHECK(j["results"]["count"] == 3);
  j = run_json("enum --n 6");
  CHECK(j["results"]["count"] == 14);

  j = run_json("--input " + write_input("hex4", hexagon) + " ik --k 2");
  CHECK(j["results"]["size"] == 5);

  j = run_json("witness --k 2");
  CHECK(j["results"]["order"] == 19);
  CHECK(j["results"]["graph6"].get<std::string>().front() == static_cast<char>(63 + 19));

  j = run_json("witness --k 1 --verify");
  CHECK(j["results"]["ik"] == 6);

  j = run_json("witness --k 3");
  CHECK(j["results"]["status"] == "skipped");
}

TEST_CASE("convert") {
  Run r = run("--input " + write_input("k3d", k3) + " convert --to g6");
  CHECK(r.code == 0);
  CHECK(r.out.find("Bw") != std::string::npos);
  r = run("--input " + write_input("k4b", k4) + " convert --to mop");
  CHECK(r.code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("search-remark --nmax 13").code == 2);
  CHECK(run("--input /nonexistent/file pw").code == 2);
  CHECK(run("--input " + write_input("junk", "3 3\n0 1\n") + " pw").code == 2);
  CHECK(run("--input random-mop:40 pw").code == 2);
  // A core of pathwidth 1 cannot produce a k = 1 witness.
  CHECK(run("--input " + write_input("p3", "3 2\n0 1\n1 2\n") + " witness --k 1 --verify").code == 2);
}

TEST_CASE("JSON is byte-stable apart from wall time") {
  auto strip = [](std::string s) {
    auto j = nlohmann::ordered_json::parse(s);
    j.erase("wall_time");
    return j.dump();
  };
  const std::string args = "--json - --input random-mop:18 --seed 9 extract --k 2";
  Run a = run(args);
  Run b = run("--threads 1 " + args);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip(a.out) == strip(b.out));
  CHECK(strip(run("--json - --threads 1 mk --k 2 --cap 9").out) == strip(run("--json - --threads 4 mk --k 2 --cap 9").out));
}
