// dbseq: command-line front end over the libdbseq C API.
//
// Exit codes: 0 success, 1 domain error / failed check, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dbseq/dbseq.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(dbs_status s) {
  if (s != DBS_OK) throw Failure{exit_domain, std::string(dbs_status_name(s)) + ": " + dbs_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  dbs_string_free(s);
  return out;
}

struct LanguageDeleter {
  void operator()(dbs_language* l) const { dbs_language_destroy(l); }
};
struct GraphDeleter {
  void operator()(dbs_graph* g) const { dbs_graph_destroy(g); }
};
using LanguagePtr = std::unique_ptr<dbs_language, LanguageDeleter>;
using GraphPtr = std::unique_ptr<dbs_graph, GraphDeleter>;

struct LanguageOptions {
  std::string alphabet;
  std::vector<std::string> forbid;
  std::string forbid_file;
  std::size_t span = 0;
  bool json = false;
};

void add_language_options(CLI::App* cmd, LanguageOptions& o, const char* span_help) {
  cmd->add_option("--alphabet", o.alphabet, "Alphabet symbols in order, one character each (e.g. 01)");
  cmd->add_option("--forbid", o.forbid, "Forbidden word (repeatable)")->take_all();
  cmd->add_option("--forbid-file", o.forbid_file, "Language file: alphabet on line 1, one forbidden word per line");
  cmd->add_option("--span", o.span, span_help)->required()->check(CLI::PositiveNumber);
}

LanguagePtr make_language(const LanguageOptions& o) {
  std::vector<const char*> words;
  for (const auto& w : o.forbid) words.push_back(w.c_str());
  dbs_language* lang = nullptr;
  if (!o.forbid_file.empty()) {
    check(dbs_language_load(o.forbid_file.c_str(), words.data(), words.size(), &lang));
    LanguagePtr owned(lang);
    if (!o.alphabet.empty()) {
      char* a = nullptr;
      check(dbs_language_alphabet(lang, &a));
      if (take(a) != o.alphabet) throw Failure{exit_usage, "--alphabet disagrees with the alphabet in --forbid-file"};
    }
    return owned;
  }
  if (o.alphabet.empty()) throw Failure{exit_usage, "one of --alphabet or --forbid-file is required"};
  check(dbs_language_create(o.alphabet.c_str(), words.data(), words.size(), &lang));
  return LanguagePtr(lang);
}

GraphPtr make_graph(const dbs_language* lang, std::size_t span) {
  dbs_graph* g = nullptr;
  check(dbs_graph_build(lang, span, &g));
  if (const char* w = dbs_graph_warning(g)) std::cerr << "warning: " << w << "\n";
  return GraphPtr(g);
}

std::string max_vertex(const dbs_graph* g) {
  char* s = nullptr;
  check(dbs_graph_max_vertex(g, &s));
  return take(s);
}

void print_stats(const dbs_graph* g) {
  std::cout << "span: " << dbs_graph_span(g) << "\n"
            << "vertices: " << dbs_graph_vertex_count(g) << "\n"
            << "arcs: " << dbs_graph_arc_count(g) << "\n"
            << "max vertex: " << max_vertex(g) << "\n";
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{exit_domain, "cannot write " + path};
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int run_words(const LanguageOptions& o, bool count_only) {
  auto lang = make_language(o);
  if (count_only) {
    uint64_t n = 0;
    check(dbs_language_count_words(lang.get(), o.span, &n));
    if (o.json)
      std::cout << Json{{"length", o.span}, {"count", n}}.dump() << "\n";
    else
      std::cout << n << "\n";
    return 0;
  }
  char* s = nullptr;
  check(dbs_language_words(lang.get(), o.span, &s));
  const auto words = Json::parse(take(s));
  if (o.json) {
    std::cout << words.dump() << "\n";
  } else {
    for (const auto& w : words) std::cout << w.get<std::string>() << "\n";
  }
  return 0;
}

int run_graph(const LanguageOptions& o, const std::string& dot_path, const std::string& json_path, bool highlight) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  int irreducible = 0;
  char* diag = nullptr;
  check(dbs_language_check_irreducible(lang.get(), o.span, &irreducible, &diag));
  const auto report = Json::parse(take(diag));

  if (!dot_path.empty()) {
    char* dot = nullptr;
    check(dbs_graph_to_dot(g.get(), highlight ? 1 : 0, &dot));
    write_output(dot_path, take(dot));
  }
  if (!json_path.empty()) {
    char* js = nullptr;
    check(dbs_graph_to_json(g.get(), &js));
    write_output(json_path, Json::parse(take(js)).dump(2));
  }
  // Keep stdout clean for files written to "-".
  if (dot_path == "-" || json_path == "-") return 0;
  print_stats(g.get());
  std::cout << "irreducible at span: " << yes_no(irreducible) << "\n";
  if (!irreducible) std::cout << "  " << report.at("diagnostic").get<std::string>() << "\n";
  return 0;
}

int run_seq(const LanguageOptions& o, const std::string& start) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  char* s = nullptr;
  check(dbs_graph_eulerian_cycle(g.get(), start.empty() ? nullptr : start.c_str(), &s));
  const auto walk = Json::parse(take(s));
  if (o.json)
    std::cout << walk.dump() << "\n";
  else
    std::cout << walk.at("label").get<std::string>() << "\n";
  return 0;
}

int run_minimal(const LanguageOptions& o) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  char* s = nullptr;
  check(dbs_graph_minimal_walk(g.get(), &s));
  const auto walk = Json::parse(take(s));
  if (o.json) {
    std::cout << walk.dump() << "\n";
    return 0;
  }
  std::cout << "start: " << walk.at("start").get<std::string>() << "\n"
            << "label: " << walk.at("label").get<std::string>() << "\n"
            << "arcs used: " << walk.at("arcCount").get<std::size_t>() << "/" << dbs_graph_arc_count(g.get()) << "\n"
            << "eulerian=" << yes_no(walk.at("eulerian").get<bool>()) << "\n";
  return 0;
}

int run_check(const LanguageOptions& o) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  int answer = 0;
  char* s = nullptr;
  check(dbs_graph_decide(g.get(), &answer, &s));
  const auto a = Json::parse(take(s));
  if (o.json) {
    std::cout << a.dump() << "\n";
    return 0;
  }
  print_stats(g.get());
  const auto& d = a.at("decision");
  std::cout << "max-label subgraph is a tree: " << yes_no(d.at("viaTree").get<bool>()) << "\n"
            << "block-word set is empty: " << yes_no(d.at("viaH").get<bool>()) << "\n"
            << "greedy walk is eulerian: " << yes_no(d.at("viaWalk").get<bool>()) << "\n"
            << "answer=" << yes_no(answer) << "\n";
  const auto& cycles = a.at("cycles");
  std::cout << "cycles: " << cycles.size() << "\n";
  for (const auto& c : cycles) {
    std::cout << " ";
    for (const auto& v : c.at("vertices")) std::cout << " " << v.get<std::string>();
    std::cout << "  (label " << c.at("label").get<std::string>() << ")\n";
  }
  const auto& words = a.at("hWords");
  std::cout << "block words: " << words.size() << "\n";
  for (const auto& w : words) {
    std::cout << "  " << w.at("word").get<std::string>() << " =";
    for (const auto& b : w.at("blocks")) {
      const auto prefix = b.at("prefix").get<std::string>();
      std::cout << " [" << prefix << "|" << b.at("drop").get<std::string>() << "]";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_count(const LanguageOptions& o) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  char* s = nullptr;
  check(dbs_graph_count_report(g.get(), &s));
  const auto r = Json::parse(take(s));
  if (o.json) {
    std::cout << r.dump() << "\n";
    return 0;
  }
  std::cout << "eulerian circuits: " << r.at("eulerianCircuits").get<std::string>() << "\n"
            << "converging trees: " << r.at("convergingTrees").get<std::string>() << "\n"
            << "factorial product: " << r.at("factorialProduct").get<std::string>() << "\n"
            << "mean out-degree: " << r.at("meanOutDegree").get<double>() << "\n";
  if (!r.at("unrestrictedBinaryReference").is_null())
    std::cout << "2^(2^(n-1)): " << r.at("unrestrictedBinaryReference").get<std::string>() << "\n";
  return 0;
}

int run_oracle(const LanguageOptions& o, bool global, std::size_t max_arcs) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  char* s = nullptr;
  if (global) {
    check(dbs_graph_global_minimal(g.get(), max_arcs, &s));
    const auto r = Json::parse(take(s));
    if (o.json) {
      std::cout << r.dump() << "\n";
      return 0;
    }
    std::cout << "global minimum start: " << r.at("start").get<std::string>() << "\n"
              << "global minimum label: " << r.at("label").get<std::string>() << "\n"
              << "root: " << r.at("root").get<std::string>() << "\n"
              << "minimum label from root: " << r.at("rootLabel").get<std::string>() << "\n";
    return 0;
  }
  int pass = 0;
  check(dbs_graph_certify(g.get(), max_arcs, &pass, &s));
  const auto v = Json::parse(take(s));
  if (o.json) {
    std::cout << v.dump() << "\n";
  } else {
    const auto& ol = v.at("oracleLabel");
    std::cout << "greedy label: " << v.at("greedyLabel").get<std::string>() << "\n"
              << "greedy eulerian: " << yes_no(v.at("greedyEulerian").get<bool>()) << "\n"
              << "oracle label: " << (ol.is_null() ? std::string("(none)") : ol.get<std::string>()) << "\n"
              << "decision: " << yes_no(v.at("decision").get<bool>()) << "\n"
              << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : exit_domain;
}

int run_verify(const LanguageOptions& o) {
  auto lang = make_language(o);
  auto g = make_graph(lang.get(), o.span);
  std::size_t violations = 0;
  char* s = nullptr;
  check(dbs_graph_verify(g.get(), &violations, &s));
  const auto r = Json::parse(take(s));
  if (o.json) {
    std::cout << r.dump() << "\n";
  } else {
    for (const auto& rep : r.at("reports")) {
      const auto& vs = rep.at("violations");
      std::cout << rep.at("name").get<std::string>() << ": " << rep.at("checked").get<std::size_t>() << " checks, "
                << vs.size() << " violations\n";
      for (const auto& v : vs) std::cout << "  " << v.get<std::string>() << "\n";
    }
    std::cout << (violations == 0 ? "OK" : "VIOLATIONS") << "\n";
  }
  return violations == 0 ? 0 : exit_domain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"de Bruijn graphs and minimal de Bruijn sequences for languages with forbidden factors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dbs_version()));

  LanguageOptions words_o, graph_o, seq_o, min_o, check_o, count_o, oracle_o, verify_o;
  bool count_only = false, highlight = false, global = false;
  std::string dot_path, json_path, start;
  std::size_t max_arcs = 24;

  auto* words = app.add_subcommand("words", "Enumerate the words of length --span");
  add_language_options(words, words_o, "Word length n");
  words->add_flag("--count-only", count_only, "Print only the number of words");
  words->add_flag("--json", words_o.json, "JSON output");

  auto* graph = app.add_subcommand("graph", "Build the de Bruijn graph and print its statistics");
  add_language_options(graph, graph_o, "Graph span n (vertices are words of length n)");
  graph->add_option("--dot", dot_path, "Write Graphviz DOT to PATH ('-' for stdout)");
  graph->add_option("--json", json_path, "Write the graph document to PATH ('-' for stdout)");
  graph->add_flag("--highlight-t", highlight, "Style the max-label subgraph in the DOT output");

  auto* seq = app.add_subcommand("seq", "Emit one de Bruijn sequence of span n+1");
  add_language_options(seq, seq_o, "Graph span n");
  seq->add_option("--start", start, "Start vertex label (default: the max vertex)");
  seq->add_flag("--json", seq_o.json, "JSON walk document");

  auto* minimal = app.add_subcommand("minimal", "Run the greedy minimal walk from the max vertex");
  add_language_options(minimal, min_o, "Graph span n");
  minimal->add_flag("--json", min_o.json, "JSON walk document");

  auto* chk = app.add_subcommand("check", "Decide whether the minimal walk is Eulerian, by both criteria");
  add_language_options(chk, check_o, "Graph span n");
  chk->add_flag("--json", check_o.json, "JSON analysis document");

  auto* count = app.add_subcommand("count", "Exact Eulerian-circuit count");
  add_language_options(count, count_o, "Graph span n");
  count->add_flag("--json", count_o.json, "JSON count report");

  auto* oracle = app.add_subcommand("oracle", "Brute-force certification of the minimal walk");
  add_language_options(oracle, oracle_o, "Graph span n");
  oracle->add_flag("--global", global, "Minimum Eulerian label over all start vertices");
  oracle->add_option("--max-arcs", max_arcs, "Refuse graphs with more arcs than this")->check(CLI::PositiveNumber);
  oracle->add_flag("--json", oracle_o.json, "JSON verdict");

  auto* verify = app.add_subcommand("verify", "Run every structural verifier");
  add_language_options(verify, verify_o, "Graph span n");
  verify->add_flag("--json", verify_o.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    if (*words) return run_words(words_o, count_only);
    if (*graph) return run_graph(graph_o, dot_path, json_path, highlight);
    if (*seq) return run_seq(seq_o, start);
    if (*minimal) return run_minimal(min_o);
    if (*chk) return run_check(check_o);
    if (*count) return run_count(count_o);
    if (*oracle) return run_oracle(oracle_o, global, max_arcs);
    if (*verify) return run_verify(verify_o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return exit_usage;
}
