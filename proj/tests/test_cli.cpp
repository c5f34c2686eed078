#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "slicefrac/slices.hpp"
#include "table_io.hpp"

using namespace sfcli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// The built binary, through the shell.
int exec(const std::string& args) {
  const std::string cmd = std::string(SLICEFRAC_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("JSON tables round-trip") {
  for (const char* what : {"fn", "jn"}) {
    const Run r = run({"table", "--what", what, "--n", "0..3", "--cap", "5"});
    REQUIRE(r.code == kPass);
    const Table t = from_json(r.out);
    CHECK(t.what == what);
    CHECK(t.cap == 5);
    CHECK(t.entries.size() == 4);
    CHECK(to_json(t) == r.out);
    CHECK(from_json(to_json(t)) == t);
  }

  Table t{"extract-demo", 3, {}};
  t.entries.push_back({"W_1", {{0, 1, sf::Rational(-7, 3)}}, std::vector<Monomial>{{0, 1, sf::Rational(-7, 3)}}, true});
  t.entries.push_back({"12", {}, {}, {}});
  t.entries.push_back({"-2", {{2, 1, sf::Rational(5)}, {0, 3, sf::Rational(1, 1000000007)}}, {}, false});
  CHECK(from_json(to_json(t)) == t);
  CHECK_THROWS(from_json("{\"what\": 1}"));
  CHECK_THROWS(from_json("not json"));
}

TEST_CASE("table contents") {
  const Run r = run({"table", "--what", "fn", "--n", "1", "--cap", "4"});
  const Table t = from_json(r.out);
  REQUIRE(t.entries.size() == 1);
  CHECK(t.entries[0].monomials == monomials(sf::f_n(1, 4)));

  // Y beyond the solved range repeats with its parity.
  const Table y = from_json(run({"table", "--what", "y", "--i", "1..12", "--cap", "2"}).out);
  const sf::SliceFamily ref = sf::solve_y(2);
  CHECK(int(ref.first.size()) == 9);
  CHECK(y.entries[10].monomials == monomials(ref.first[7]));
  CHECK(y.entries[11].monomials == monomials(ref.first[8]));

  const Run csv = run({"table", "--what", "w", "--i", "1..2", "--cap", "2", "--format", "csv"});
  CHECK(csv.out.rfind("index,tb_exp,tw_exp,coeff\n1,0,1,1/1\n", 0) == 0);
}

TEST_CASE("exit codes in process") {
  CHECK(run({"table", "--what", "y", "--i", "3..1"}).code == kUsage);
  CHECK(run({"table", "--what", "fn", "--i", "1..2"}).code == kUsage);
  CHECK(run({"table", "--what", "fn", "--n", "x..2"}).code == kUsage);
  CHECK(run({"table", "--what", "fn", "--n", "1", "--cap", "0"}).code == kUsage);
  CHECK(run({"table", "--what", "zz", "--n", "1"}).code == kUsage);
  CHECK(run({"verify", "nosuchsuite"}).code == kUsage);
  CHECK(run({"frobnicate"}).code == kUsage);
  CHECK(run({}).code == kUsage);
  CHECK(run({"--help"}).code == kPass);
  CHECK(run({"table", "--what", "fn", "--n", "1", "--output", "/nonexistent-dir/t.json"}).code == kUsage);

  setenv("SLICEFRAC_MAX_CAP", "4", 1);
  CHECK(run({"table", "--what", "fn", "--n", "1", "--cap", "5"}).code == kUsage);
  unsetenv("SLICEFRAC_MAX_CAP");

  const Run v = run({"verify", "reflection", "--alpha", "2", "--seed", "3", "--format", "json"});
  CHECK(v.code == kPass);
  CHECK(v.out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("extraction in process") {
  const Run s = run({"extract", "--type", "stieltjes", "--i", "1..2", "--cap", "6", "--format", "json"});
  REQUIRE(s.code == kPass);
  const Table t = from_json(s.out);
  REQUIRE(t.entries.size() == 4);
  CHECK(t.entries[0].index == "W_1");
  CHECK(t.entries[3].index == "B_4");
  for (const Entry& e : t.entries) {
    CHECK(e.equal == true);
    CHECK(e.reference == e.monomials);
  }
  const Run bad = run({"extract", "--type", "stieltjes", "--i", "1..3", "--cap", "6", "--work-cap", "2"});
  CHECK(bad.code == kFail);
  CHECK(bad.err.find("non-exact division") != std::string::npos);
}

TEST_CASE("end-to-end exit codes") {
  CHECK(exec("table --what fn --n 1..3 --cap 4 --format json") == 0);
  CHECK(exec("table --what y --i 1..6 --cap 5") == 0);
  CHECK(exec("table --what y --i 6..1 --cap 5") == 2);
  CHECK(exec("verify equality --n 3 --cap 6") == 0);
  CHECK(exec("verify heaps --alpha 4 --seed 7") == 0);
  CHECK(exec("verify nosuchsuite") == 2);
  CHECK(exec("extract --type stieltjes --i 1..3 --cap 6") == 0);
  CHECK(exec("extract --type newtype --i 1..4 --cap 6") == 0);
  CHECK(exec("extract --type stieltjes --i 1..3 --cap 6 --work-cap 2") == 1);
  CHECK(exec("extract --type newtype --i 1..4 --cap 6 --work-cap 6") == 1);
  CHECK(exec("extract --type sideways --i 1..2") == 2);
  CHECK(exec("--help") == 0);
  CHECK(exec("") == 2);

  const auto path = std::filesystem::temp_directory_path() / "slicefrac_cli_table.json";
  CHECK(exec("table --what q --i 0..4 --cap 5 --output " + path.string()) == 0);
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(from_json(text.str()) == from_json(run({"table", "--what", "q", "--i", "0..4", "--cap", "5"}).out));
  std::filesystem::remove(path);
}

TEST_CASE("insufficient work cap is a failure") {
  const Run r = run({"extract", "--type", "stieltjes", "--i", "1..2", "--cap", "6", "--work-cap", "7"});
  CHECK(r.code == kFail);
  CHECK(r.err.find("below the requested cap") != std::string::npos);
}
