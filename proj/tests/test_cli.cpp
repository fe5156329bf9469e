// End-to-end tests driving the installed binary through a shell, checking
// exact bytes, exit codes and diagnostics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("lexiphy_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(LEXIPHY_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_fixture(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

// Three languages, five meanings: d(a,b)=0.2, d(a,c)=d(b,c)=0.6.
const char* kWorkedExample =
    "language\tm1\tm2\tm3\tm4\tm5\n"
    "a\tpa\tpa\tpa\tpa\tpa\n"
    "b\tpa\tpa\tpa\tpa\tko\n"
    "c\tpa\tpa\tti\tti\tti\n";

}  // namespace

TEST_CASE("distances prints an exact csv matrix") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult r = run("distances " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "language,a,b,c\n"
        "a,0.000000,0.200000,0.600000\n"
        "b,0.200000,0.000000,0.600000\n"
        "c,0.600000,0.600000,0.000000\n");
}

TEST_CASE("tree prints the expected newick") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult r = run("tree " + file.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "((a:0.1,b:0.1):0.2,c:0.3);\n");
}

TEST_CASE("tree accepts a stability cutoff and a time transform") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult top = run("tree " + file.string() + " --top-n 4");
  CHECK(top.exit_code == 0);
  CHECK(top.out.find(';') != std::string::npos);

  const RunResult timed = run("tree " + file.string() + " --epsilon 0.5");
  CHECK(timed.exit_code == 0);
  CHECK(timed.out != "((a:0.1,b:0.1):0.2,c:0.3);\n");  // time units now

  const RunResult calibrated =
      run("tree " + file.string() + " --calibrate a:b:1000");
  CHECK(calibrated.exit_code == 0);

  const RunResult conflicted =
      run("tree " + file.string() + " --calibrate a:b:1000 --epsilon 0.5");
  CHECK(conflicted.exit_code == 1);
}

TEST_CASE("distances can restrict to the most stable meanings") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  // top-2 keeps m1 and m2, identical in all three languages
  const RunResult r = run("distances " + file.string() +
                          " --meanings top:2 --synonyms min");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "language,a,b,c\n"
        "a,0.000000,0.000000,0.000000\n"
        "b,0.000000,0.000000,0.000000\n"
        "c,0.000000,0.000000,0.000000\n");
}

TEST_CASE("stability prints the ranked table") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult r = run("stability " + file.string());
  CHECK(r.exit_code == 0);
  // m1,m2 identical everywhere; m3,m4 mean distance 2/3; m5 fully disjoint
  CHECK(r.out ==
        "meaning,S,pairs_compared,rank\n"
        "m1,1.000000,3,1\n"
        "m2,1.000000,3,2\n"
        "m3,0.333333,3,3\n"
        "m4,0.333333,3,4\n"
        "m5,0.000000,3,5\n");
}

TEST_CASE("correlate with the full list is exactly one") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult r = run("correlate " + file.string() + " --grid 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,c\n5,1.000000\n");
}

TEST_CASE("rf-curve with the full list is zero") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult r = run("rf-curve " + file.string() + " --grid 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,rf\n5,0\n");
}

TEST_CASE("times applies the log transform") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  const RunResult r = run("times " + file.string() + " --epsilon 0.5");
  CHECK(r.exit_code == 0);
  // -ln(1-0.2)/(2*0.5) = 0.223144, -ln(1-0.6)/(2*0.5) = 0.916291
  CHECK(r.out ==
        "language,a,b,c\n"
        "a,0.000000,0.223144,0.916291\n"
        "b,0.223144,0.000000,0.916291\n"
        "c,0.916291,0.916291,0.000000\n");
}

TEST_CASE("outputs are byte-deterministic across runs") {
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  for (const char* sub : {"distances", "stability", "tree"}) {
    const RunResult first = run(std::string(sub) + " " + file.string());
    const RunResult second = run(std::string(sub) + " " + file.string());
    CHECK(first.out == second.out);
  }
}

TEST_CASE("synth emits a parseable dataset with ground truth") {
  const fs::path data = scratch_dir() / "synth.tsv";
  const fs::path tree = scratch_dir() / "truth.nwk";
  const fs::path rates = scratch_dir() / "rates.csv";
  const std::string args =
      "synth --languages 6 --meanings 12 --slow 0.05 --fast 1.0 "
      "--fraction-slow 0.5 --seed 42 --out " +
      data.string() + " --tree-out " + tree.string() + " --rates-out " +
      rates.string();
  const RunResult r = run(args);
  CHECK(r.exit_code == 0);

  const std::string dataset_bytes = slurp(data);
  CHECK(dataset_bytes.rfind("language\t", 0) == 0);
  const std::string tree_bytes = slurp(tree);
  CHECK(tree_bytes.find(';') != std::string::npos);
  const std::string rates_bytes = slurp(rates);
  CHECK(rates_bytes.rfind("meaning,rate\n", 0) == 0);

  // deterministic in the seed
  const RunResult again = run(args);
  CHECK(again.exit_code == 0);
  CHECK(slurp(data) == dataset_bytes);

  // the dataset feeds back into the analysis subcommands
  const RunResult dist = run("distances " + data.string());
  CHECK(dist.exit_code == 0);
  const RunResult stab = run("stability " + data.string());
  CHECK(stab.exit_code == 0);
}

TEST_CASE("usage errors exit with one") {
  CHECK(run("").exit_code == 1);
  CHECK(run("frobnicate x.tsv").exit_code == 1);
  CHECK(run("times somefile.tsv").exit_code == 1);  // missing --epsilon
  const fs::path file = write_fixture("worked.tsv", kWorkedExample);
  CHECK(run("distances " + file.string() + " --meanings top:x").exit_code == 1);
  CHECK(run("distances " + file.string() + " --synonyms median").exit_code == 1);
}

TEST_CASE("format errors exit with two and name the line") {
  const fs::path bad = write_fixture("bad.tsv",
                                     "language\tone\ttwo\n"
                                     "A\tuno\tdue\n"
                                     "B\tuno\n");
  const RunResult r = run("distances " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run("distances /nonexistent/path.tsv").exit_code == 2);
}

TEST_CASE("computation errors exit with three and name the stage") {
  // one shared meaning, completely different words: distance saturates at 1
  const fs::path sat = write_fixture("saturated.tsv",
                                     "language\tone\n"
                                     "A\tabc\n"
                                     "B\txyz\n");
  const RunResult r = run("times " + sat.string() + " --epsilon 0.5");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("times") != std::string::npos);

  // calibrating against a zero distance cannot work
  const fs::path zero = write_fixture("zero.tsv",
                                      "language\tone\ttwo\n"
                                      "A\tsame\tx\n"
                                      "B\tsame\tx\n"
                                      "C\tother\ty\n");
  const RunResult cal = run("tree " + zero.string() + " --calibrate A:B:100");
  CHECK(cal.exit_code == 3);
  CHECK(cal.err.find("calibrate") != std::string::npos);
}
