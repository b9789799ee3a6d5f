#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dbseq/language.hpp"

namespace dbseq {

using VertexId = std::size_t;
using ArcId = std::size_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  Symbol label{};

  bool operator==(const Arc&) const = default;
};

// Arc-labeled digraph with word-labeled vertices. Out-arcs of a vertex carry
// pairwise distinct labels and are kept sorted by label; arcs are individuals
// (parallel arcs with different labels are distinct).
class Digraph {
 public:
  Digraph(Alphabet alphabet, std::vector<Word> vertex_labels, std::vector<Arc> arcs);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const Word& label(VertexId v) const { return labels_.at(v); }
  std::string name(VertexId v) const { return alphabet_.render(labels_.at(v)); }
  std::optional<VertexId> find(const Word& label) const;
  // Parses `label` and looks it up; throws vertex_not_in_graph if absent.
  VertexId vertex(std::string_view label) const;

  const Arc& arc(ArcId a) const { return arcs_.at(a); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const ArcId> out_arcs(VertexId v) const { return out_.at(v); }
  std::span<const ArcId> in_arcs(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_.at(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_.at(v).size(); }
  std::optional<ArcId> out_arc(VertexId v, Symbol label) const;

  bool is_balanced() const;
  bool is_strongly_connected() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_, in_;
  std::map<Word, VertexId> index_;
};

// The de Bruijn graph of span n: the largest strongly connected component of
// the graph whose arcs are the words of W_{n+1}. Vertices are in
// lexicographic order and arcs in order of their words.
class DeBruijnGraph : public Digraph {
 public:
  const Language& language() const noexcept { return language_; }
  std::size_t span() const noexcept { return span_; }
  // The lexicographically largest vertex, m.
  VertexId max_vertex() const noexcept { return max_vertex_; }
  // Set when the span is too short for the forbidden words.
  const std::optional<std::string>& warning() const noexcept { return warning_; }

  friend DeBruijnGraph build_graph(const Language& lang, std::size_t span);

 private:
  DeBruijnGraph(Digraph g, Language lang, std::size_t span, VertexId max_vertex, std::optional<std::string> warning)
      : Digraph(std::move(g)),
        language_(std::move(lang)),
        span_(span),
        max_vertex_(max_vertex),
        warning_(std::move(warning)) {}

  Language language_;
  std::size_t span_;
  VertexId max_vertex_;
  std::optional<std::string> warning_;
};

// Throws ambiguous_component when two components tie for the most arcs and
// empty_graph when W_{n+1} is empty.
DeBruijnGraph build_graph(const Language& lang, std::size_t span);

// (tail label)(arc label), a word of W_{n+1}.
Word arc_to_word(const DeBruijnGraph& g, ArcId a);
ArcId word_to_arc(const DeBruijnGraph& g, const Word& w);

// Vertex reached from `start` by reading `w`; throws no_such_walk.
VertexId walk_label_target(const Digraph& g, VertexId start, const Word& w);

// Graphviz text. Arcs in `highlight` are drawn bold red; with no highlight
// no styling attributes are emitted.
std::string export_dot(const Digraph& g, std::span<const ArcId> highlight = {});

}  // namespace dbseq
