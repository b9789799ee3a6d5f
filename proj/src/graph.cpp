#include "dbseq/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "raw_graph.hpp"
#include "scc.hpp"

namespace dbseq {

Digraph::Digraph(Alphabet alphabet, std::vector<Word> vertex_labels, std::vector<Arc> arcs)
    : alphabet_(std::move(alphabet)), labels_(std::move(vertex_labels)), arcs_(std::move(arcs)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(Errc::empty_graph, "graph has no vertices");
  for (VertexId v = 0; v < n; ++v) {
    if (!index_.emplace(labels_[v], v).second)
      throw Error(Errc::invalid_argument, "duplicate vertex label '" + alphabet_.render(labels_[v]) + "'");
  }
  out_.resize(n);
  in_.resize(n);
  for (ArcId a = 0; a < arcs_.size(); ++a) {
    const Arc& e = arcs_[a];
    if (e.tail >= n || e.head >= n) throw Error(Errc::invalid_argument, "arc endpoint out of range");
    if (index_of(e.label) >= alphabet_.size()) throw Error(Errc::invalid_argument, "arc label outside the alphabet");
    out_[e.tail].push_back(a);
    in_[e.head].push_back(a);
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& out = out_[v];
    std::sort(out.begin(), out.end(), [&](ArcId x, ArcId y) { return arcs_[x].label < arcs_[y].label; });
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (arcs_[out[i - 1]].label == arcs_[out[i]].label)
        throw Error(Errc::invalid_argument, "two arcs leaving '" + name(v) + "' share the label '" +
                                                alphabet_.render(arcs_[out[i]].label) + "'");
    }
  }
}

std::optional<VertexId> Digraph::find(const Word& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Digraph::vertex(std::string_view label) const {
  auto v = find(alphabet_.parse(label));
  if (!v) throw Error(Errc::vertex_not_in_graph, "no vertex labeled '" + std::string(label) + "'");
  return *v;
}

std::optional<ArcId> Digraph::out_arc(VertexId v, Symbol label) const {
  for (ArcId a : out_.at(v))
    if (arcs_[a].label == label) return a;
  return std::nullopt;
}

bool Digraph::is_balanced() const {
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (in_[v].size() != out_[v].size()) return false;
  return true;
}

bool Digraph::is_strongly_connected() const {
  std::vector<std::vector<std::size_t>> succ(vertex_count());
  for (const Arc& e : arcs_) succ[e.tail].push_back(e.head);
  return detail::strong_components(succ).count == 1;
}

DeBruijnGraph build_graph(const Language& lang, std::size_t span) {
  if (span == 0) throw Error(Errc::invalid_argument, "span must be at least 1");
  const auto raw = detail::build_raw_graph(lang, span);
  if (raw.arc_words.empty())
    throw Error(Errc::empty_graph, "no words of length " + std::to_string(span + 1) + " survive the forbidden set");

  const auto comps = detail::strong_components(raw.successors());
  const auto choice = detail::largest_component(comps, raw.tails, raw.heads);
  if (choice.nonempty == 0) throw Error(Errc::empty_graph, "no strongly connected component carries an arc");
  if (choice.tied)
    throw Error(Errc::ambiguous_component, "several strongly connected components share the maximal arc count " +
                                               std::to_string(choice.arcs) + "; the language is not irreducible");

  std::vector<VertexId> remap(raw.vertices.size(), raw.vertices.size());
  std::vector<Word> labels;
  for (std::size_t v = 0; v < raw.vertices.size(); ++v) {
    if (comps.component_of[v] != choice.winner) continue;
    remap[v] = labels.size();
    labels.push_back(raw.vertices[v]);
  }
  std::vector<Arc> arcs;
  arcs.reserve(choice.arcs);
  for (std::size_t a = 0; a < raw.arc_words.size(); ++a) {
    if (comps.component_of[raw.tails[a]] != choice.winner || comps.component_of[raw.heads[a]] != choice.winner)
      continue;
    arcs.push_back({remap[raw.tails[a]], remap[raw.heads[a]], raw.arc_words[a].back()});
  }

  std::optional<std::string> warning;
  if (span + 1 < lang.max_forbidden_length()) {
    warning = "span " + std::to_string(span) + " is shorter than the longest forbidden word minus one (" +
              std::to_string(lang.max_forbidden_length() - 1) +
              "); the graph may not capture every constraint of the language";
  }
  // Vertices are sorted, so m is the last one.
  const VertexId m = labels.size() - 1;
  Digraph g(lang.alphabet(), std::move(labels), std::move(arcs));
  return DeBruijnGraph(std::move(g), lang, span, m, std::move(warning));
}

Word arc_to_word(const DeBruijnGraph& g, ArcId a) {
  if (a >= g.arc_count()) throw Error(Errc::invalid_argument, "arc id " + std::to_string(a) + " is not in the graph");
  const Arc& e = g.arc(a);
  Word w = g.label(e.tail);
  w.push_back(e.label);
  return w;
}

ArcId word_to_arc(const DeBruijnGraph& g, const Word& w) {
  if (w.size() != g.span() + 1)
    throw Error(Errc::invalid_argument, "expected a word of length " + std::to_string(g.span() + 1));
  if (!is_circular_word(g.language(), w))
    throw Error(Errc::word_not_in_language, "'" + g.alphabet().render(w) + "' is not in W_" + std::to_string(w.size()));
  auto tail = g.find(Word(w.begin(), w.end() - 1));
  if (!tail)
    throw Error(Errc::vertex_not_in_graph, "prefix of '" + g.alphabet().render(w) +
                                               "' is outside the strongly connected component");
  auto a = g.out_arc(*tail, w.back());
  if (!a)
    throw Error(Errc::vertex_not_in_graph, "arc for '" + g.alphabet().render(w) +
                                               "' is outside the strongly connected component");
  return *a;
}

VertexId walk_label_target(const Digraph& g, VertexId start, const Word& w) {
  if (start >= g.vertex_count()) throw Error(Errc::invalid_argument, "start vertex out of range");
  VertexId v = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto a = g.out_arc(v, w[i]);
    if (!a)
      throw Error(Errc::no_such_walk, "no arc labeled '" + g.alphabet().render(w[i]) + "' leaves '" + g.name(v) +
                                          "' (step " + std::to_string(i) + ")");
    v = g.arc(*a).head;
  }
  return v;
}

std::string export_dot(const Digraph& g, std::span<const ArcId> highlight) {
  std::set<ArcId> marked(highlight.begin(), highlight.end());
  std::ostringstream out;
  out << "digraph debruijn {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  \"" << g.name(v) << "\";\n";
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Arc& e = g.arc(a);
    out << "  \"" << g.name(e.tail) << "\" -> \"" << g.name(e.head) << "\" [label=\"" << g.alphabet().render(e.label)
        << "\"";
    if (marked.count(a)) out << ", color=\"red\", penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dbseq
