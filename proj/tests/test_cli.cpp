#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DBSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("graph statistics and exports") {
  auto r = run("graph --alphabet 01 --forbid 11 --span 5");
  CHECK(r.status == 0);
  CHECK(has(r.out, "vertices: 13"));
  CHECK(has(r.out, "arcs: 18"));
  CHECK(has(r.out, "max vertex: 10101"));

  auto j = run("graph --alphabet 01 --forbid 11 --span 5 --json -");
  REQUIRE(j.status == 0);
  auto doc = nlohmann::json::parse(j.out.substr(j.out.find('{')));
  CHECK(doc["vertices"].size() == 13);
  CHECK(doc["arcs"].size() == 18);

  auto dot = run("graph --alphabet 01 --forbid 01111 --span 4 --dot - --highlight-t");
  CHECK(dot.status == 0);
  CHECK(has(dot.out, "digraph"));
  CHECK(has(dot.out, "color=\"red\""));
}

TEST_CASE("sequences and minimal walks") {
  auto seq = run("seq --alphabet 01 --span 2");
  CHECK(seq.status == 0);
  CHECK(seq.out == "00010111\n");
  auto min = run("minimal --alphabet 01 --span 3");
  CHECK(min.status == 0);
  CHECK(has(min.out, "0000100110101111"));
  CHECK(has(min.out, "eulerian=true"));
  auto golden = run("minimal --alphabet 01 --forbid 11 --span 5");
  CHECK(has(golden.out, "eulerian=false"));
}

TEST_CASE("decision, counting, oracle and verification") {
  auto golden = run("check --alphabet 01 --forbid 11 --span 5");
  CHECK(golden.status == 0);
  CHECK(has(golden.out, "vertices: 13"));
  CHECK(has(golden.out, "arcs: 18"));
  auto check = run("check --alphabet 01 --forbid 01111 --span 4");
  CHECK(check.status == 0);
  CHECK(has(check.out, "answer=false"));
  CHECK(has(check.out, "0101 1011 0110 1101 1010"));
  CHECK(has(check.out, "10110 = [1|0] [11|0]"));
  CHECK(has(run("check --alphabet 012 --span 2").out, "answer=true"));

  auto count = run("count --alphabet 01 --span 3");
  CHECK(has(count.out, "eulerian circuits: 16"));

  auto oracle = run("oracle --alphabet 01 --forbid 01111 --span 4 --max-arcs 26");
  CHECK(oracle.status == 0);
  CHECK(has(oracle.out, "PASS"));
  CHECK(run("oracle --alphabet 01 --span 4").status == 1);

  auto global = run("oracle --alphabet 01 --forbid 11 --span 2 --global");
  CHECK(has(global.out, "global minimum start: 01"));

  auto verify = run("verify --alphabet 01 --forbid 11 --span 5");
  CHECK(verify.status == 0);
  CHECK(has(verify.out, "OK"));
}

TEST_CASE("words and forbidden-word files") {
  auto words = run("words --alphabet 01 --forbid 11 --span 5 --count-only");
  CHECK(words.out == "11\n");
  auto path = std::filesystem::temp_directory_path() / "dbseq_cli_forbid.txt";
  {
    std::ofstream out(path);
    out << "01\n11\n";
  }
  auto from_file = run("words --forbid-file " + path.string() + " --span 5 --count-only");
  CHECK(from_file.out == "11\n");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run("graph --span 3").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("graph --alphabet 01 --forbid 01 --forbid 10 --span 2").status == 1);
  CHECK(run("graph --alphabet 01 --forbid 0 --forbid 1 --span 2").status == 1);
  CHECK(run("seq --alphabet 01 --forbid 11 --span 5 --start 11111").status == 1);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"seq --alphabet 012 --forbid 11 --span 3", "check --alphabet 01 --forbid 11 --span 7",
                           "graph --alphabet 01 --forbid 000 --span 5 --json -"}) {
    CHECK(run(args).out == run(args).out);
  }
}
