#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "altdet/cli.hpp"

using altdet::io::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(ALTDET_FIXTURES) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("accept") {
  const auto parity = fixture("parity.afa");
  CHECK(run({"accept", parity, "q0", "ab"}).out == "accept\n");
  CHECK(run({"accept", parity, "q0", "ab"}).code == 0);
  CHECK(run({"accept", parity, "q0", "abab"}).code == 0);
  const auto b = run({"accept", parity, "q0", "b"});
  CHECK(b.out == "reject\n");
  CHECK(b.code == 1);
  CHECK(run({"accept", parity, "q0", ""}).code == 1);
  CHECK(run({"accept", parity, "q0", "ab", "--algebra", "alt"}).code == 0);
  CHECK(run({"accept", parity, "q0", "ab", "--algebra", "max"}).code == 2);
  const auto dead = fixture("dead-end.nfa");
  CHECK(run({"accept", dead, "p", "a"}).code == 1);
  CHECK(run({"accept", dead, "p", "a", "--algebra", "min"}).code == 0);
  CHECK(run({"accept", fixture("ends-ab.nfa"), "p0", "aab"}).code == 0);
  CHECK(run({"accept", fixture("parity.dfa"), "ee", "abba"}).code == 0);
}

TEST_CASE("determinize prints a canonical DFA with decoded states") {
  const auto r = run({"determinize", fixture("ends-ab.nfa"), "p0"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "kind: dfa\nalphabet: a b\nstates: s0 s1 s2\naccepting: s2\n"
        "# s0 = {p0}\n# s1 = {p0 p1}\n# s2 = {p0 p2}\n"
        "trans s0 a: s1\ntrans s0 b: s0\ntrans s1 a: s1\ntrans s1 b: s2\ntrans s2 a: s1\ntrans s2 b: s0\n");
  const auto p = run({"determinize", fixture("parity.afa"), "q0"});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "states: s0 s1 s2\n"));
  CHECK(contains(p.out, "# s0 = {{q0}}\n"));
  CHECK(contains(p.out, "# s1 = {{q1 q3} {q2 q4}}\n"));
}

TEST_CASE("determinize writes DOT and honours the state cap") {
  const auto path = std::filesystem::temp_directory_path() / "altdet_cli_test.dot";
  std::filesystem::remove(path);
  CHECK(run({"determinize", fixture("ends-ab.nfa"), "p0", "--dot", path.string()}).code == 0);
  CHECK(slurp(path).rfind("digraph automaton {", 0) == 0);
  const auto capped = run({"determinize", fixture("ends-ab.nfa"), "p0", "--state-cap", "2"});
  CHECK(capped.code == 3);
  CHECK(contains(capped.err, "cap of 2 states"));
}

TEST_CASE("equiv") {
  const auto same = run({"equiv", fixture("parity.afa"), "q0", fixture("parity.dfa"), "oo"});
  CHECK(same.code == 1);
  const auto sinks = run({"equiv", fixture("accept-sink.dfa"), "s", fixture("reject-sink.dfa"), "s"});
  CHECK(sinks.out == "distinguished by \"\"\n");
  CHECK(sinks.code == 1);
  const auto self = run({"equiv", fixture("a-parity.nfa"), "even", fixture("a-parity.nfa"), "even"});
  CHECK(self.out == "equivalent\n");
  CHECK(self.code == 0);
  const auto det = run({"equiv", fixture("mod3.nfa"), "r0", fixture("mod3.nfa"), "r1"});
  CHECK(det.code == 1);
  CHECK(contains(det.out, "distinguished by"));
}

TEST_CASE("export-dot") {
  const auto r = run({"export-dot", fixture("parity.afa"), "--start", "q0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "shape=diamond"));
  CHECK(contains(r.out, "__start -> \"q0\""));
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"accept", fixture("parity.afa")}).code == 2);
  CHECK(run({"accept", fixture("parity.afa"), "q9", "a"}).code == 2);
  CHECK(run({"accept", fixture("parity.afa"), "q0", "abc"}).code == 2);
  const auto missing = run({"accept", fixture("nope.nfa"), "p", "a"});
  CHECK(missing.code == 2);
  CHECK(contains(missing.err, "cannot open"));
  CHECK(run({"check-laws", "--monad", "foo"}).code == 2);
  CHECK(run({"check-laws", "--all", "--distlaw"}).code == 2);
  const auto other = std::filesystem::temp_directory_path() / "altdet_cli_x.dfa";
  std::ofstream(other) << "kind: dfa\nalphabet: x\nstates: s\naccepting: s\ntrans s x: s\n";
  CHECK(run({"equiv", fixture("accept-sink.dfa"), "s", other.string(), "s"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "check-laws"));
}

TEST_CASE("check-laws on one scope") {
  const auto r = run({"check-laws", "--order"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "SUBJECT order-lemmas expect=pass result=pass ok\n"));
  CHECK(contains(r.out, "SUMMARY subjects=1 unexpected=0\n"));
  const auto alt = run({"check-laws", "--monad", "alt", "--samples", "200"});
  CHECK(alt.code == 0);
  CHECK(contains(alt.out, "DIAGRAM alt[2].assoc pass checked=200 mode=sampled seed=0xC0A1"));
}

TEST_CASE("check-laws --all passes and writes the negative witnesses") {
  const auto path = std::filesystem::temp_directory_path() / "altdet_cli_witnesses.txt";
  std::filesystem::remove(path);
  const auto r = run({"check-laws", "--all", "--witness-out", path.string()});
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "SUMMARY subjects=12 unexpected=0\n"));
  CHECK(contains(r.out, "SUBJECT cnf-exact expect=fail result=fail ok\n"));
  const auto w = slurp(path);
  CHECK(contains(w, "WITNESS cnf-exact.naturality input=f=[0,0],S={{0},{1},{0,1}} lhs={} rhs={{0}}"));
  CHECK(contains(w, "WITNESS pp-atleast[2].unit-left input={{0},{1}}"));
}
