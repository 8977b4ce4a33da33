#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "cubicmaps/reference_tables.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() / "cubicmaps_cli_stderr.txt";
  const std::string command = std::string(CUBICMAPS_CLI_PATH) + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(err_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("count") {
  auto r = run("count --surface orientable --genus 2 --kind unsensed");
  CHECK(r.status == 0);
  CHECK(r.out == "8\n");
  r = run("count --surface nonorientable --genus 4 --kind rooted");
  CHECK(r.status == 0);
  CHECK(r.out == "3780\n");
  r = run("count --surface orientable --genus 3 --kind sensed --format json");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == "1726");
}

TEST_CASE("count usage errors") {
  auto r = run("count --surface nonorientable --genus 3 --kind sensed");
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(lines(r.err) == 1);
  CHECK(run("count --surface nonorientable --genus 1 --kind rooted").status == 2);
  CHECK(run("count --surface orientable --genus 0 --kind rooted").status == 2);
  CHECK(run("count --surface sphere --genus 2 --kind rooted").status == 2);
  CHECK(run("count --surface orientable --genus 2 --kind signed").status == 2);
  CHECK(run("count --surface orientable --kind rooted").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("table csv") {
  auto r = run("table --surface orientable --gmin 1 --gmax 1 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out == "g,rooted,sensed,unsensed\n1,1,1,1\n");
  r = run("table --surface orientable --gmin 1 --gmax 10 --format csv");
  CHECK(r.status == 0);
  std::string expected = "g,rooted,sensed,unsensed\n";
  for (const auto& row : cubicmaps::reference::kOrientable) {
    expected += std::to_string(row.genus) + "," + std::string(row.rooted) + "," + std::string(row.sensed) + "," +
                std::string(row.unsensed) + "\n";
  }
  CHECK(r.out == expected);
  r = run("table --surface nonorientable --gmin 2 --gmax 20 --format csv");
  CHECK(r.status == 0);
  expected = "g,rooted,unsensed\n";
  for (const auto& row : cubicmaps::reference::kNonorientable) {
    expected += std::to_string(row.genus) + "," + std::string(row.rooted) + "," + std::string(row.unsensed) + "\n";
  }
  CHECK(r.out == expected);
}

TEST_CASE("table formats and determinism") {
  const auto a = run("table --surface nonorientable --gmin 2 --gmax 6");
  const auto b = run("table --surface nonorientable --gmin 2 --gmax 6");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("| g | rooted | unsensed |", 0) == 0);
  const auto j = run("table --surface orientable --gmin 1 --gmax 3 --format json");
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.size() == 3);
  CHECK(doc[2]["unsensed"] == "927");
}

TEST_CASE("table range errors") {
  CHECK(run("table --surface orientable --gmin 0 --gmax 3").status == 2);
  CHECK(run("table --surface orientable --gmin 4 --gmax 3").status == 2);
  CHECK(run("table --surface orientable --gmin 1 --gmax 10001").status == 2);
  CHECK(run("table --surface nonorientable --gmin 1 --gmax 3").status == 2);
  CHECK(run("table --surface orientable --gmin 1 --gmax 3 --format xml").status == 2);
}

TEST_CASE("orbifolds") {
  auto r = run("orbifolds --genus 2 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out == "g,l,genus,ns,nv,epsilon\n2,2,1,1,0,2\n");
  r = run("orbifolds --genus 5 --format csv --nonzero-only");
  CHECK(r.out == "g,l,genus,ns,nv,epsilon\n5,3,1,0,2,8\n");
  r = run("orbifolds --genus 6 --format csv --nonzero-only");
  CHECK(lines(r.out) == 1 + 6);
  r = run("orbifolds --gmin 2 --gmax 8 --format csv --nonzero-only");
  CHECK(lines(r.out) == 1 + 24);
  r = run("orbifolds --gmin 2 --gmax 30 --format json");
  bool marked = false;
  for (const auto& row : nlohmann::json::parse(r.out)) marked = marked || row["zero"] == true;
  CHECK(marked);
  CHECK(run("orbifolds --genus 1").status == 2);
  CHECK(run("orbifolds").status == 2);
}

TEST_CASE("verify with a reduced budget") {
  const auto report = std::filesystem::temp_directory_path() / "cubicmaps_verify_report.json";
  const auto r = run("verify --max-edges-orientable 3 --max-edges-full 6 --report " + report.string());
  CHECK(r.status == 0);
  CHECK(lines(r.out) >= 7);
  CHECK(r.out.find("FAIL") == std::string::npos);
  std::ifstream in(report);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["passed"] == true);
  CHECK(doc["suites"].size() >= 6);
}

TEST_CASE("verify limit errors") {
  CHECK(run("verify --max-edges-full 11").status == 2);
  CHECK(run("verify --max-edges-orientable 2").status == 2);
}

TEST_CASE("help exits cleanly") {
  const auto r = run("--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("count") != std::string::npos);
}
