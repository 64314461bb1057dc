// End-to-end tests of the vdp binary: exit codes, file pipelines and report
// lines. The binary path comes from the VDP_BIN environment variable (set by
// ctest); every case is skipped when it is missing.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "vdp/io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("VDP_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("vdp_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << content;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool has_bin() { return std::getenv("VDP_BIN") != nullptr; }

// Last machine line of a report dump.
std::string machine_line(const std::string& output, const std::string& check) {
  std::string needle = "check=" + check + " ";
  std::size_t pos = output.rfind(needle);
  REQUIRE(pos != std::string::npos);
  return output.substr(pos, output.find('\n', pos) - pos);
}

const char* kIdentity8 = "p 2\nK 3\nrepr values\n0\n1\n2\n3\n4\n5\n6\n7\n";
const char* kDouble8 = "p 2\nK 3\nrepr values\n0\n2\n4\n6\n0\n2\n4\n6\n";

}  // namespace

TEST_CASE("check: exit codes for pass, fail and input errors") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto id = tmp.write("id.vdp", kIdentity8);
  CHECK(run("check " + id + " --mp").exit_code == 0);
  CHECK(run("check " + id).exit_code == 0);  // --mp is the default

  const auto dbl = tmp.write("dbl.vdp", kDouble8);
  const auto fail = run("check " + dbl + " --mp");
  CHECK(fail.exit_code == 1);
  const auto report = vdp::parse_machine_line(machine_line(fail.output, "mp"));
  CHECK(!report.verdict.ok);
  CHECK(report.verdict.cond == vdp::Cond::MpCond1);
  CHECK(report.verdict.witness == vdp::Witness{vdp::PairWitness{0, 1}});

  CHECK(run("check " + tmp.path("missing.vdp")).exit_code == 2);
  const auto bad = tmp.write("bad.vdp", "p 4\nK 1\nrepr values\n0\n1\n2\n3\n");
  CHECK(run("check " + bad).exit_code == 2);
}

TEST_CASE("check: all five checks run and agree on a sound instance") {
  if (!has_bin()) return;
  TempDir tmp;
  // f(x) = x + 2 mod 16
  std::string body;
  for (int x = 0; x < 16; ++x) body += std::to_string((x + 2) % 16) + "\n";
  const auto file = tmp.write("shift.vdp", "p 2\nK 4\nrepr values\n" + body);
  const auto res = run("check " + file + " --compat --mp --p2 --oracle --local 2");
  CHECK(res.exit_code == 0);
  for (const char* check : {"compat", "mp", "mp-p2", "oracle-mp", "mp-local"}) {
    const auto r = vdp::parse_machine_line(machine_line(res.output, check));
    CHECK(r.verdict.ok);
  }
}

TEST_CASE("check: oracle on a non-Lipschitz input is an input error") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto f = tmp.write("nl.vdp", "p 2\nK 2\nrepr values\n0\n1\n3\n2\n");
  CHECK(run("check " + f + " --oracle").exit_code == 2);
  CHECK(run("check " + f + " --compat").exit_code == 1);
}

TEST_CASE("check: local threshold is validated") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto id = tmp.write("id.vdp", kIdentity8);
  CHECK(run("check " + id + " --local 1").exit_code == 0);
  CHECK(run("check " + id + " --local 3").exit_code == 2);
}

TEST_CASE("check: --out writes the report file, --max-table guards parsing") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto id = tmp.write("id.vdp", kIdentity8);
  const auto report = tmp.path("report.txt");
  CHECK(run("check " + id + " --mp --out " + report).exit_code == 0);
  const auto parsed = vdp::parse_machine_line(
      machine_line(read_file(report), "mp"));
  CHECK(parsed.verdict.ok);
  CHECK(run("check " + id + " --max-table 4").exit_code == 2);
}

TEST_CASE("generate: deterministic, self-checking families") {
  if (!has_bin()) return;
  TempDir tmp;
  for (const std::string family : {"additive", "affine", "example41"}) {
    const auto out1 = tmp.path(family + "_1.vdp");
    const auto out2 = tmp.path(family + "_2.vdp");
    const std::string flags =
        " --p 3 --K 3 --seed 7 --family " + family + (family == "example41" ? " --s 1" : "");
    CHECK(run("generate" + flags + " --out " + out1).exit_code == 0);
    CHECK(run("generate" + flags + " --out " + out2).exit_code == 0);
    CHECK(read_file(out1) == read_file(out2));
    CHECK(run("check " + out1 + " --mp --oracle").exit_code == 0);
  }
  // different seeds give different additive tables
  CHECK(run("generate --p 3 --K 3 --seed 8 --family additive --out " + tmp.path("a.vdp"))
            .exit_code == 0);
  CHECK(read_file(tmp.path("a.vdp")) != read_file(tmp.path("additive_1.vdp")));
}

TEST_CASE("generate: parameter errors exit 2") {
  if (!has_bin()) return;
  CHECK(run("generate --p 4 --K 2").exit_code == 2);
  CHECK(run("generate --p 5 --K 2 --family example41 --s 2").exit_code == 2);
  CHECK(run("generate --p 2 --K 25").exit_code == 2);  // table limit
}

TEST_CASE("generate example41 at p=5 matches its permutation structure") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto out = tmp.path("e41.vdp");
  CHECK(run("generate --p 5 --K 2 --family example41 --s 3 --out " + out).exit_code == 0);
  CHECK(run("check " + out + " --mp --oracle").exit_code == 0);
}

TEST_CASE("coeffs and eval invert each other byte-for-byte") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto values = tmp.path("f.vdp");
  REQUIRE(run("generate --p 3 --K 2 --seed 3 --out " + values).exit_code == 0);
  const auto coeffs = tmp.path("f.coeffs");
  REQUIRE(run("coeffs " + values + " --out " + coeffs).exit_code == 0);
  const auto back = tmp.path("f.back");
  REQUIRE(run("eval " + coeffs + " --out " + back).exit_code == 0);
  CHECK(read_file(back) == read_file(values));

  // identity mod 8: frozen coefficient body
  const auto id = tmp.write("id.vdp", kIdentity8);
  const auto id_coeffs = run("coeffs " + id);
  CHECK(id_coeffs.exit_code == 0);
  CHECK(id_coeffs.output.find("0\n1\n2\n2\n4\n4\n4\n4\n") != std::string::npos);
  CHECK(id_coeffs.output.find("# compatible: yes") != std::string::npos);

  // constant 5 mod 9
  std::string body = "5\n";
  for (int i = 0; i < 8; ++i) body += "5\n";
  const auto c = tmp.write("c.vdp", "p 3\nK 2\nrepr values\n" + body);
  const auto c_coeffs = run("coeffs " + c);
  CHECK(c_coeffs.output.find("5\n5\n5\n0\n0\n0\n0\n0\n0\n") != std::string::npos);

  // wrong representation is rejected
  CHECK(run("coeffs " + coeffs).exit_code == 2);
  CHECK(run("eval " + values).exit_code == 2);
}

TEST_CASE("p2 cross-check runs both paths") {
  if (!has_bin()) return;
  TempDir tmp;
  const auto id = tmp.write("id.vdp", kIdentity8);
  const auto res = run("check " + id + " --p2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("check=mp-p2") != std::string::npos);

  const auto dbl = tmp.write("dbl.vdp", kDouble8);
  CHECK(run("check " + dbl + " --p2").exit_code == 1);

  // p2 on an odd prime is a parameter error
  std::string body;
  for (int x = 0; x < 9; ++x) body += std::to_string(x) + "\n";
  const auto id9 = tmp.write("id9.vdp", "p 3\nK 2\nrepr values\n" + body);
  CHECK(run("check " + id9 + " --p2").exit_code == 2);
}

TEST_CASE("a coefficient file tabulates and checks as expected") {
  if (!has_bin()) return;
  TempDir tmp;
  // 1-Lipschitz by construction (scaled higher coefficients), constant mod 3
  const auto series = tmp.write("s.vdp", "p 3\nK 2\nrepr coeffs\n1\n4\n7\n3\n3\n3\n6\n6\n6\n");
  const auto evald = run("eval " + series);
  CHECK(evald.exit_code == 0);
  CHECK(evald.output.find("1\n4\n7\n4\n7\n1\n7\n1\n4\n") != std::string::npos);
  CHECK(run("check " + series + " --compat").exit_code == 0);
  CHECK(run("check " + series + " --mp").exit_code == 1);
}
