#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gecs/gecs.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;

  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    std::istringstream in(output);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
  }

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

std::string cli_path() {
  const char* env = std::getenv("GECS_CLI");
  REQUIRE(env != nullptr);
  return env;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("gecs_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }

  std::string at(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string kFixtureChecks = "10001\n01100\n01111\n01010\n";

}  // namespace

TEST_CASE("cli: genset writes canonical files and reports the size") {
  TempDir dir;
  const auto arm = run_cli("genset arm --r 3 --m 2 --out " + dir.at("a.set"));
  CHECK(arm.exit_code == 0);
  CHECK(arm.lines().at(0) == "size: 3");
  CHECK(slurp(dir.at("a.set")) == "100\n110\n101\n");

  const auto weber = run_cli("genset weber --r 3");
  CHECK(weber.exit_code == 0);
  CHECK(weber.lines().at(0) == "size: 4");
  CHECK(weber.lines().size() == 5);  // the set follows on stdout

  CHECK(run_cli("genset arm --r 2 --m 3").exit_code == 2);
  CHECK(run_cli("genset arm --r 3").exit_code == 2);  // --m required for arm
  CHECK(run_cli("genset frob --r 3 --m 2").exit_code == 2);
}

TEST_CASE("cli: verify reports pass/fail with the documented lines") {
  TempDir dir;
  const auto good = dir.file("good.set", "100\n110\n101\n");
  const auto pass = run_cli("verify " + good + " --m 2");
  CHECK(pass.exit_code == 0);
  CHECK(pass.lines().at(0) == "status: PASS");
  CHECK(pass.lines().at(1) == "matrices_checked: 21");
  CHECK(pass.lines().at(2).starts_with("elapsed_ms: "));

  const auto bad = dir.file("bad.set", "110\n101\n011\n");
  const auto fail = run_cli("verify " + bad + " --r 3 --m 2");
  CHECK(fail.exit_code == 1);
  CHECK(fail.lines().at(0) == "status: FAIL");
  CHECK(fail.contains("counterexample: "));

  const auto ragged = dir.file("ragged.set", "110\n10\n");
  CHECK(run_cli("verify " + ragged + " --m 2").exit_code == 2);
  CHECK(run_cli("verify " + good + " --r 4 --m 2").exit_code == 2);
  CHECK(run_cli("verify " + dir.at("missing.set") + " --m 2").exit_code == 2);
}

TEST_CASE("cli: verify is independent of the job count") {
  TempDir dir;
  const auto good = dir.file("good.set", "100\n110\n101\n");
  const auto serial = run_cli("verify " + good + " --m 2 --jobs 1");
  const auto parallel = run_cli("verify " + good + " --m 2 --jobs 4");
  CHECK(serial.lines().at(0) == parallel.lines().at(0));
  CHECK(serial.lines().at(1) == parallel.lines().at(1));
}

TEST_CASE("cli: search prints the budget and a certified set on success") {
  const auto found = run_cli("search --r 5 --m 2 --seed 1");
  CHECK(found.exit_code == 0);
  const auto lines = found.lines();
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "budget: 10");
  CHECK(lines[1] == "found: yes");
  // re-certify the printed set through the library
  std::vector<gecs::BitVec> members;
  for (std::size_t i = 2; i < lines.size(); ++i)
    members.push_back(gecs::BitVec::from_string(lines[i]));
  const gecs::GenericSet set(5, std::move(members));
  CHECK(gecs::verify_generic(set, 5, 2).pass);

  const auto hopeless = run_cli("search --r 2 --m 1 --size 1 --seed 3");
  CHECK(hopeless.exit_code == 1);
  CHECK(hopeless.lines().at(1) == "found: no");

  const auto tiny = run_cli("search --r 1 --m 1 --size 1 --seed 0");
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.lines().at(1) == "found: yes");
  CHECK(tiny.lines().at(2) == "1");
}

TEST_CASE("cli: checks generates {aH} and validates its inputs") {
  TempDir dir;
  const auto pcm = dir.file("pcm.txt", kFixtureChecks);
  const auto units = dir.file("units.set", "1000\n0100\n0010\n0001\n");
  const auto run = run_cli("checks " + units + " " + pcm + " --out " + dir.at("h.txt"));
  CHECK(run.exit_code == 0);
  CHECK(run.lines().at(0) == "checks: 4");
  CHECK(slurp(dir.at("h.txt")) == kFixtureChecks);  // unit vectors select rows

  TempDir dir2;
  const auto ham = gecs::hamming_code(4);
  gecs::save_matrix(dir2.at("ham.txt"), ham.pcm());
  gecs::save_set(dir2.at("a43.set"), gecs::low_weight_set(4, 3));
  const auto seven = run_cli("checks " + dir2.at("a43.set") + " " + dir2.at("ham.txt"));
  CHECK(seven.exit_code == 0);
  CHECK(seven.lines().at(0) == "checks: 7");

  const auto deficient = dir.file("bad_pcm.txt", "110\n110\n");
  CHECK(run_cli("checks " + units + " " + deficient).exit_code == 2);
  const auto narrow = dir.file("narrow.set", "100\n");
  CHECK(run_cli("checks " + narrow + " " + pcm).exit_code == 2);
}

TEST_CASE("cli: decode prints the peeling trace with 1-based positions") {
  TempDir dir;
  const auto checks = dir.file("checks.txt", kFixtureChecks);

  const auto stuck = run_cli("decode " + checks + " ????0");
  CHECK(stuck.exit_code == 1);
  CHECK(stuck.lines().at(0) == "step 1: check 1 resolves pos 1 = 0");
  CHECK(stuck.lines().at(1) == "stuck: {2,3,4}");

  const auto clean = run_cli("decode " + checks + " 11111");
  CHECK(clean.exit_code == 0);
  CHECK(clean.lines().at(0) == "decoded: 11111");

  const auto full = run_cli("decode " + checks + " \"?1111\"");
  CHECK(full.exit_code == 0);
  CHECK(full.lines().at(0) == "step 1: check 1 resolves pos 1 = 1");
  CHECK(full.lines().at(1) == "decoded: 11111");

  CHECK(run_cli("decode " + checks + " 11x11").exit_code == 2);
  CHECK(run_cli("decode " + checks + " 111").exit_code == 2);
}

TEST_CASE("cli: stopping lists labeled sets after the count") {
  TempDir dir;
  const auto checks = dir.file("checks.txt", kFixtureChecks);
  const auto pcm = dir.file("pcm.txt", kFixtureChecks);

  const auto labeled = run_cli("stopping " + checks + " " + pcm + " --max-size 3");
  CHECK(labeled.exit_code == 0);
  CHECK(labeled.lines().at(0) == "count: 1");
  CHECK(labeled.lines().at(1) == "{2,3,4} correctable");

  const auto plain = run_cli("stopping " + checks + " --max-size 3");
  CHECK(plain.exit_code == 0);
  CHECK(plain.lines().at(1) == "{2,3,4}");

  const auto zero = run_cli("stopping " + checks + " --max-size 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.lines().at(0) == "count: 0");

  const auto wide = dir.file("wide.txt", "100000000000000000000\n");
  CHECK(run_cli("stopping " + wide + " --max-size 1").exit_code == 2);
}

TEST_CASE("cli: bounds") {
  const auto b = run_cli("bounds --r 5 --m 2");
  CHECK(b.exit_code == 0);
  const auto lines = b.lines();
  CHECK(lines.at(0) == "lower: 5");
  CHECK(lines.at(1) == "upper_coefficient: 2");
  CHECK(lines.at(2) == "upper: 10");
  CHECK(lines.at(3) == "construction: 5");

  const auto c = run_cli("bounds --r 10 --m 3");
  CHECK(c.lines().at(1) == "upper_coefficient: 4.42431");
  CHECK(c.lines().at(2) == "upper: 45");

  CHECK(run_cli("bounds --r 2 --m 1").exit_code == 2);  // no m=1 construction
  CHECK(run_cli("bounds --r 2 --m 3").exit_code == 2);
}

TEST_CASE("cli: full pipeline from files alone decodes a correctable pattern") {
  TempDir dir;
  REQUIRE(run_cli("genset arm --r 4 --m 3 --out " + dir.at("a.set")).exit_code == 0);
  gecs::save_matrix(dir.at("ham.txt"), gecs::hamming_code(4).pcm());
  REQUIRE(run_cli("checks " + dir.at("a.set") + " " + dir.at("ham.txt") +
                  " --out " + dir.at("checks.txt"))
              .exit_code == 0);
  REQUIRE(run_cli("verify " + dir.at("a.set") + " --m 3").exit_code == 0);

  // erase three positions of a codeword and decode from the files
  const gecs::Code ham = gecs::hamming_code(4);
  std::mt19937_64 rng(5);
  gecs::BitVec word(ham.length());
  for (const auto& basis : ham.codeword_basis())
    if (rng() & 1) word ^= basis;
  const gecs::ErasurePattern pattern = {0, 7, 14};
  REQUIRE(gecs::is_correctable(ham, pattern));
  const auto received = gecs::ReceivedWord::erase(word, pattern);
  const auto decoded = run_cli("decode " + dir.at("checks.txt") + " \"" +
                               received.to_string() + "\"");
  CHECK(decoded.exit_code == 0);
  CHECK(decoded.contains("decoded: " + word.to_string()));
}

TEST_CASE("cli: usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("genset arm").exit_code == 2);     // missing --r
  CHECK(run_cli("verify --m 2").exit_code == 2);   // missing file
  CHECK(run_cli("--help").exit_code == 0);
}
