#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "corpus.hpp"
#include "dbseq/graph.hpp"
#include "dbseq/structure.hpp"
#include "oracles.hpp"

using namespace dbseq;

namespace {

std::string bits(unsigned value, unsigned width) {
  std::string s;
  for (unsigned i = width; i-- > 0;) s.push_back(((value >> i) & 1) ? '1' : '0');
  return s;
}

using ArcTriple = std::tuple<std::string, std::string, std::string>;

std::set<ArcTriple> arc_set(const Digraph& g) {
  std::set<ArcTriple> out;
  for (const Arc& e : g.arcs()) out.insert({g.name(e.tail), g.alphabet().render(e.label), g.name(e.head)});
  return out;
}

// Nodes are the integer values of the binary labels.
std::set<ArcTriple> numbered(std::initializer_list<std::tuple<unsigned, unsigned, unsigned>> arcs, unsigned width) {
  std::set<ArcTriple> out;
  for (auto [t, h, l] : arcs) out.insert({bits(t, width), std::to_string(l), bits(h, width)});
  return out;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("golden mean span 5 has the expected adjacency arc for arc") {
  auto g = build_graph(Language::from_strings("01", {"11"}), 5);
  CHECK(g.vertex_count() == 13);
  CHECK(g.arc_count() == 18);
  CHECK(g.name(g.max_vertex()) == "10101");
  CHECK_FALSE(g.warning());
  const auto expected = numbered({{0, 0, 0},  {0, 1, 1},   {1, 2, 0},   {2, 4, 0},  {2, 5, 1},  {4, 8, 0},
                                  {4, 9, 1},  {5, 10, 0},  {8, 16, 0},  {8, 17, 1}, {9, 18, 0}, {10, 20, 0},
                                  {10, 21, 1}, {16, 0, 0}, {17, 2, 0},  {18, 4, 0}, {20, 8, 0}, {21, 10, 0}},
                                 5);
  CHECK(arc_set(g) == expected);
}

TEST_CASE("max-label subgraph arcs of F={01111} span 4") {
  auto g = build_graph(Language::from_strings("01", {"01111"}), 4);
  CHECK(g.vertex_count() == 15);
  CHECK(g.arc_count() == 26);
  CHECK(g.name(g.max_vertex()) == "1110");
  CHECK_FALSE(g.find(g.alphabet().parse("1111")));
  CHECK(g.find(g.alphabet().parse("0111")));

  MaxArcAnalysis t(g);
  std::set<std::pair<std::string, std::string>> expected_arcs;
  for (auto [tail, head] : std::vector<std::pair<unsigned, unsigned>>{
           {0, 1}, {8, 1}, {4, 9}, {12, 9}, {2, 5}, {10, 5}, {6, 13}, {1, 3}, {9, 3}, {5, 11}, {3, 7}, {7, 14}, {13, 10}, {11, 6}})
    expected_arcs.insert({bits(tail, 4), bits(head, 4)});
  std::set<std::pair<std::string, std::string>> got;
  for (ArcId a : t.arcs()) got.insert({g.name(g.arc(a).tail), g.name(g.arc(a).head)});
  CHECK(got == expected_arcs);
}

TEST_CASE("unrestricted binary graphs") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto g = build_graph(Language::from_strings("01", {}), n);
    CHECK(g.vertex_count() == (std::size_t{1} << n));
    CHECK(g.arc_count() == (std::size_t{2} << n));
    CHECK(g.name(g.max_vertex()) == std::string(n, '1'));
  }
}

TEST_CASE("graphs agree with the reachability oracle") {
  auto instances = corpus::fixed();
  for (const auto& inst : corpus::random(30)) instances.push_back(inst);
  for (const auto& inst : instances) {
    INFO(inst.name());
    auto g = build_graph(inst.language(), inst.span);
    auto o = oracle::debruijn(inst.alphabet, inst.forbidden, inst.span);
    std::set<std::string> names, oracle_names(o.vertices.begin(), o.vertices.end());
    for (VertexId v = 0; v < g.vertex_count(); ++v) names.insert(g.name(v));
    CHECK(names == oracle_names);
    std::set<ArcTriple> oracle_arcs;
    for (const auto& e : o.arcs) oracle_arcs.insert({o.vertices[e.tail], std::string(1, e.label), o.vertices[e.head]});
    CHECK(arc_set(g) == oracle_arcs);
  }
}

TEST_CASE("structural invariants over the corpus") {
  for (const auto& inst : corpus::fixed()) {
    INFO(inst.name());
    auto g = build_graph(inst.language(), inst.span);
    CHECK(g.is_balanced());
    CHECK(g.is_strongly_connected());
    for (VertexId v = 1; v < g.vertex_count(); ++v) CHECK(g.label(v - 1) < g.label(v));
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.label(g.max_vertex()) >= g.label(v));
    for (ArcId a = 0; a < g.arc_count(); ++a) {
      const Arc& e = g.arc(a);
      Word shifted(g.label(e.tail).begin() + 1, g.label(e.tail).end());
      shifted.push_back(e.label);
      CHECK(shifted == g.label(e.head));
      const Word w = arc_to_word(g, a);
      CHECK(is_circular_word(g.language(), w));
      CHECK(word_to_arc(g, w) == a);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto out = g.out_arcs(v);
      for (std::size_t i = 1; i < out.size(); ++i) CHECK(g.arc(out[i - 1]).label < g.arc(out[i]).label);
    }
  }
}

TEST_CASE("arc and word conversions reject outsiders") {
  auto g = build_graph(Language::from_strings("01", {"11"}), 5);
  const auto& a = g.alphabet();
  CHECK(a.render(arc_to_word(g, word_to_arc(g, a.parse("010100")))) == "010100");
  CHECK_THROWS_AS(word_to_arc(g, a.parse("110000")), Error);
  try {
    word_to_arc(g, a.parse("110000"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::word_not_in_language);
  }
  CHECK_THROWS_AS(word_to_arc(g, a.parse("0101")), Error);
  CHECK_THROWS_AS(g.vertex("11000"), Error);
  CHECK_THROWS_AS(arc_to_word(g, 18), std::exception);

  // A circular word can still fall outside the main component.
  auto tail = build_graph(Language::from_strings("01", {"001"}), 3);
  try {
    word_to_arc(tail, tail.alphabet().parse("0000"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::vertex_not_in_graph);
  }
}

TEST_CASE("reading a word along the graph") {
  auto g = build_graph(Language::from_strings("01", {"11"}), 5);
  const auto& a = g.alphabet();
  CHECK(g.name(walk_label_target(g, g.vertex("00000"), a.parse("10010"))) == "10010");
  CHECK(g.name(walk_label_target(g, g.vertex("10101"), a.parse("0"))) == "01010");
  CHECK(walk_label_target(g, g.vertex("01001"), Word{}) == g.vertex("01001"));
  CHECK_THROWS_AS(walk_label_target(g, g.vertex("10101"), a.parse("1")), Error);
}

TEST_CASE("graph build errors and warnings") {
  auto expect_code = [](auto&& f, Errc code) {
    try {
      f();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect_code([] { build_graph(Language::from_strings("01", {"01", "10"}), 2); }, Errc::ambiguous_component);
  expect_code([] { build_graph(Language::from_strings("01", {"0", "1"}), 3); }, Errc::empty_graph);
  expect_code([] { build_graph(Language::from_strings("01", {}), 0); }, Errc::invalid_argument);

  CHECK(build_graph(Language::from_strings("01", {"01111"}), 3).warning());
  CHECK_FALSE(build_graph(Language::from_strings("01", {"01111"}), 4).warning());

  // A lone vertex with a self-loop is a legitimate component.
  auto zeros = build_graph(Language::from_strings("01", {"1"}), 3);
  CHECK(zeros.vertex_count() == 1);
  CHECK(zeros.arc_count() == 1);
}

TEST_CASE("digraph validation") {
  auto a = Alphabet::from_chars("ab");
  auto x = a.parse("a"), y = a.parse("b");
  CHECK_THROWS_AS(Digraph(a, {x, x}, {}), Error);
  CHECK_THROWS_AS(Digraph(a, {x, y}, {{0, 1, symbol_at(0)}, {0, 0, symbol_at(0)}}), Error);
  CHECK_THROWS_AS(Digraph(a, {x, y}, {{0, 2, symbol_at(0)}}), Error);
  Digraph ok(a, {x, y}, {{0, 1, symbol_at(1)}, {0, 1, symbol_at(0)}, {1, 0, symbol_at(0)}});
  CHECK(ok.out_degree(0) == 2);
  CHECK(ok.arc(ok.out_arcs(0)[0]).label == symbol_at(0));
  CHECK(ok.in_degree(1) == 2);
  CHECK(ok.out_arc(1, symbol_at(1)) == std::nullopt);
  CHECK_FALSE(ok.is_balanced());
  CHECK(ok.is_strongly_connected());
}

TEST_CASE("dot export") {
  auto g = build_graph(Language::from_strings("01", {"11"}), 5);
  const std::string plain = export_dot(g);
  CHECK(count_lines_with(plain, "->") == 18);
  CHECK(count_lines_with(plain, ";") == 13 + 18);
  CHECK(plain.find("color") == std::string::npos);
  CHECK(plain == export_dot(build_graph(Language::from_strings("01", {"11"}), 5)));

  MaxArcAnalysis t(g);
  const auto highlighted = export_dot(g, t.arcs());
  CHECK(count_lines_with(highlighted, "color=\"red\"") == g.vertex_count() - 1);
}

TEST_CASE("arcs as words") {
  auto g = build_graph(Language::from_strings("01", {"11"}), 5);
  const auto& a = g.alphabet();
  const ArcId up = *g.out_arc(g.vertex("01010"), symbol_at(1));
  CHECK(g.name(g.arc(up).head) == "10101");
  CHECK(a.render(arc_to_word(g, up)) == "010101");
  const ArcId loop = word_to_arc(g, a.parse("000000"));
  CHECK(g.arc(loop).tail == g.vertex("00000"));
  CHECK(g.arc(loop).head == g.vertex("00000"));
  auto full = build_graph(Language::from_strings("01", {}), 3);
  CHECK(full.alphabet().render(arc_to_word(full, *full.out_arc(full.vertex("011"), symbol_at(1)))) == "0111");
}
