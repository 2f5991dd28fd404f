#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iterator>
#include <string>

#include "support/subprocess.hpp"

using namespace wbst::testsupport;

namespace {

std::string bin() {
  const std::string b = wbst_binary_from_env();
  REQUIRE_MESSAGE(!b.empty(), "WBST_BIN must point at the wbst binary");
  return shell_quote(b);
}

RunResult wbst_run(const std::string& args) {
  return run_command(bin() + " " + args + " 2>/dev/null");
}

}  // namespace

TEST_CASE("build prints search results as it replays, then the tree") {
  TempDir dir;
  const auto script =
      dir.file("s.txt", "# build then probe\ninsert 5 \"a\"\nsearch 5\nsearch 9\ninsert 3 \"b\"\n");
  const auto r = wbst_run("build " + shell_quote(script));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a\n<default>\n(5 \"a\" (3 \"b\" e e) e)\n");
}

TEST_CASE("build -o writes the tree to a file instead of stdout") {
  TempDir dir;
  const auto script = dir.file("s.txt", "insert 5 \"a\"\nsearch 5\n");
  const auto out_path = (dir.path() / "t.txt").string();
  const auto r = wbst_run("build " + shell_quote(script) + " -o " + shell_quote(out_path));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "a\n");  // only the search result on stdout
  std::ifstream f(out_path);
  std::string contents((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(contents == "(5 \"a\" e e)\n");
}

TEST_CASE("built trees always pass check") {
  TempDir dir;
  const auto script = dir.file("s.txt",
                               "insert 4 \"d\"\ninsert 3 \"c\"\ninsert 5 \"e\"\ninsert 4 \"D\"\n"
                               "insert -100 \"lo\"\ninsert 2 \"b\"\n");
  const auto tree = (dir.path() / "t.txt").string();
  REQUIRE(wbst_run("build " + shell_quote(script) + " -o " + shell_quote(tree)).exit_code == 0);
  const auto r = wbst_run("check " + shell_quote(tree));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "BST\n");
}

TEST_CASE("search reads keys, including negative ones") {
  TempDir dir;
  const auto tree = dir.file("t.txt", "(0 \"zero\" (-7 \"neg\" e e) e)\n");
  CHECK(wbst_run("search " + shell_quote(tree) + " -7").out == "neg\n");
  CHECK(wbst_run("search " + shell_quote(tree) + " 0").out == "zero\n");
  CHECK(wbst_run("search " + shell_quote(tree) + " 12").out == "<default>\n");
}

TEST_CASE("parse and usage failures exit with 2") {
  TempDir dir;
  CHECK(wbst_run("search " + shell_quote((dir.path() / "missing.txt").string()) + " 5").exit_code == 2);
  const auto garbled = dir.file("g.txt", "(5 \"a\" e)\n");
  CHECK(wbst_run("check " + shell_quote(garbled)).exit_code == 2);
  CHECK(wbst_run("stats " + shell_quote(garbled)).exit_code == 2);
  CHECK(wbst_run("frobnicate").exit_code == 2);
  CHECK(wbst_run("").exit_code == 2);
  CHECK(wbst_run("search " + shell_quote(garbled) + " notakey").exit_code == 2);
  CHECK(wbst_run("fuzz --ops -3").exit_code == 2);
}

TEST_CASE("check distinguishes ordered from unordered trees by exit code") {
  TempDir dir;
  const auto bad = dir.file("bad.txt", "(5 \"a\" (7 \"b\" e e) e)");
  const auto r = wbst_run("check " + shell_quote(bad));
  CHECK(r.exit_code == 1);
  CHECK(r.out == "NOT-BST\n");
}

TEST_CASE("stats counts duplicate keys once") {
  TempDir dir;
  // not a BST: same key twice, stats must still work
  const auto tree = dir.file("t.txt", "(5 \"a\" (5 \"b\" e e) (2 \"c\" e e))");
  const auto r = wbst_run("stats " + shell_quote(tree));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "comp=2 nodes=3 keys=2 min=2 max=5\n");
}

TEST_CASE("fuzz runs clean and rejects bad usage") {
  CHECK(wbst_run("fuzz --seed 7 --ops 500 --key-range 20").exit_code == 0);
  CHECK(wbst_run("fuzz --ops 0").exit_code == 0);
  CHECK(wbst_run("fuzz --key-range 0").exit_code == 2);
  CHECK(wbst_run("--help").exit_code == 0);
}
