#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "cli.hpp"
#include "fixtures.hpp"
#include "qproof/qdimacs.hpp"
#include "qproof/qrat.hpp"
#include "qproof/squaredeq.hpp"

using namespace qproof;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("qproof_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string mres_file(const std::string& name) { return testing::fixture_path("mres/" + name + ".mres"); }

// Runs a shell command, returning its exit status and standard output.
std::pair<int, std::string> shell(const std::string& command) {
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("gen and refute write the library's output") {
  Outcome r = run({"gen", "eq2", "--n", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == write_qdimacs(generate_eq2(2).formula));
  r = run({"refute", "eq2", "--n", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == write_qrat(emit_eq2_refutation(2)));

  TempDir dir;
  CHECK(run({"gen", "eq2", "--n", "1", "-o", dir.file("f.qdimacs")}).status == 0);
  CHECK(parse_qdimacs(testing::read_fixture("eq2/eq2_1.qdimacs")) == read_qdimacs_file(dir.file("f.qdimacs")));
}

TEST_CASE("refute then check verifies EQ2(3)") {
  TempDir dir;
  const std::string f = dir.write("eq2_3.qdimacs", run({"gen", "eq2", "--n", "3"}).out);
  const std::string proof = run({"refute", "eq2", "--n", "3"}).out;
  const Outcome r = run({"check", "qrat", "--formula", f, "--at", "prop", "--univ-rule", "ur", "--qrat-adds"}, proof);
  CHECK(r.status == 0);
  CHECK(r.out == "VERIFIED\n");
}

TEST_CASE("rejections name the step and reason") {
  TempDir dir;
  const std::string f = dir.write("f.qdimacs", "p cnf 2 1\ne 1 2 0\n2 0\n");
  Outcome r = run({"check", "qrat", "--formula", f}, "1 0\n");
  CHECK(r.status == 1);
  CHECK(r.out == "REJECTED step=1 reason=not-at-not-qrat\n");
  CHECK_FALSE(r.err.empty());

  r = run({"check", "qrat", "--formula", f, "--qrat-adds"}, "1 0\n");
  CHECK(r.status == 1);
  CHECK(r.out == "REJECTED step=2 reason=no-empty-clause\n");

  r = run({"check", "qrat", "--formula", f}, "d 2 0\nd 2 0\n");
  CHECK(r.out == "REJECTED step=2 reason=clause-not-present\n");
}

TEST_CASE("truncated and malformed input exits with status 2") {
  TempDir dir;
  const std::string f = dir.write("f.qdimacs", write_qdimacs(generate_eq2(1).formula));
  std::string proof = write_qrat(emit_eq2_refutation(1));
  proof.resize(proof.rfind("5 0\n0\n") + 1);  // line 11 loses its terminating 0
  const std::string path = dir.write("cut.qrat", proof);
  Outcome r = run({"check", "qrat", "--formula", f, path});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("parse error: " + path + ":11") != std::string::npos);

  r = run({"check", "qrat", "--formula", dir.write("bad.qdimacs", "p cnf 1 1\ne 1 0\n1 x 0\n")}, "0\n");
  CHECK(r.status == 2);
  CHECK(r.err.find("bad.qdimacs:3:3") != std::string::npos);

  CHECK(run({"check", "qrat", "--formula", dir.file("missing.qdimacs")}, "0\n").status == 2);
  CHECK(run({"check", "qrat"}, "0\n").status == 2);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"gen"}).status == 2);
  CHECK(run({"gen", "eq2"}).status == 2);
  CHECK(run({"gen", "eq2", "--n", "0"}).status == 2);
  CHECK(run({"check", "qrat", "--at", "maybe"}).status == 2);
  CHECK(run({"eval", "--max-vars", "0"}).status == 2);
  const Outcome help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("translate") != std::string::npos);
}

TEST_CASE("check mres finds the formula named in the header") {
  for (const auto& fx : testing::mres_fixtures()) {
    CAPTURE(fx.name);
    const Outcome r = run({"check", "mres", mres_file(fx.name)});
    CHECK(r.status == 0);
    CHECK(r.out == "VERIFIED\n");
  }
  const Outcome bad = run({"check", "mres", "--formula", testing::fixture_path("mres/equality1.qdimacs")},
                          "1 a 1\n2 a 2\n3 r 1 2 2\n");
  CHECK(bad.status == 1);
  CHECK(bad.out == "REJECTED step=3 reason=pivot-not-existential\n");
}

TEST_CASE("translate output checks in universal-aware mode only") {
  for (const auto& fx : testing::mres_fixtures()) {
    CAPTURE(fx.name);
    const Outcome t = run({"translate", "--mres", mres_file(fx.name)});
    REQUIRE(t.status == 0);
    CHECK(parse_qrat(t.out).steps.size() == fx.proof.lines.size());
    // The output names its formula, so no --formula is needed.
    const Outcome univ = run({"check", "qrat", "--at", "univ"}, t.out);
    CHECK(univ.out == "VERIFIED\n");
    CHECK(univ.status == 0);
    CHECK(run({"check", "qrat", "--at", "prop"}, t.out).status == 1);
  }
  const Outcome bad = run({"translate", "--formula", testing::fixture_path("mres/equality1.qdimacs"), "--mres", "-"},
                          "1 a 1\n");
  CHECK(bad.status == 1);
}

TEST_CASE("eval") {
  CHECK(run({"eval", "--formula", testing::fixture_path("eq2/eq2_1.qdimacs")}).out == "FALSE\n");
  const Outcome t = run({"eval"}, "p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  CHECK(t.status == 0);
  CHECK(t.out == "TRUE\n");
  CHECK(run({"eval", "--max-vars", "3", "--formula", testing::fixture_path("eq2/eq2_1.qdimacs")}).status == 2);
}

TEST_CASE("stats") {
  const Outcome q = run({"stats", "--formula", testing::fixture_path("eq2/eq2_2.qdimacs"), "--qrat-adds",
                         testing::fixture_path("eq2/eq2_2.qrat")});
  CHECK(q.status == 0);
  CHECK(q.out.find("format: qrat\n") == 0);
  CHECK(q.out.find("steps: 48\n") != std::string::npos);
  CHECK(q.out.find("ureduce-qratu: 32\n") != std::string::npos);
  CHECK(q.out.find("add-at: 16\n") != std::string::npos);
  CHECK(q.out.find("max-clause-width: 5\n") != std::string::npos);
  CHECK(q.out.find("propagation-calls: ") != std::string::npos);
  CHECK(q.out.size() >= 9);
  CHECK(q.out.substr(q.out.size() - 9) == "VERIFIED\n");

  const Outcome m = run({"stats", mres_file("shared_merge")});
  CHECK(m.status == 0);
  CHECK(m.out.find("format: mres\n") == 0);
  CHECK(m.out.find("merges: 2\n") != std::string::npos);
  CHECK(m.out.find("lines: 8\n") != std::string::npos);
}

TEST_CASE("identical runs give identical output") {
  const std::vector<std::string> args{"stats", "--formula", testing::fixture_path("eq2/eq2_2.qdimacs"), "--qrat-adds",
                                      testing::fixture_path("eq2/eq2_2.qrat")};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("the binary composes in a shell pipeline") {
  TempDir dir;
  const std::string tool = QPROOF_TOOL;
  const std::string f = dir.file("eq2_3.qdimacs");
  REQUIRE(shell(tool + " gen eq2 --n 3 -o " + f).first == 0);
  auto [status, out] = shell(tool + " refute eq2 --n 3 | " + tool + " check qrat --formula " + f + " --qrat-adds");
  CHECK(status == 0);
  CHECK(out == "VERIFIED\n");

  std::tie(status, out) = shell(tool + " translate --mres " + mres_file("equality3") + " | " + tool + " check qrat --at univ");
  CHECK(status == 0);
  CHECK(out == "VERIFIED\n");

  std::tie(status, out) = shell("printf '1 2 0\\n2' | " + tool + " check qrat --formula " + f + " 2>/dev/null");
  CHECK(status == 2);
  CHECK(out.empty());
}
