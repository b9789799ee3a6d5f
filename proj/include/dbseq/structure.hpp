#pragma once

// The subgraph made of the maximum-label out-arc of every vertex except m,
// and the machinery that characterizes when the greedy minimal walk from m
// is Eulerian: each vertex's overlap with m, floor and restricted vertices,
// the cycles of the subgraph, and the block-decomposable words.
//
// For a vertex u != m:
//   overlap(u)     longest word that is a suffix of u and a prefix of m
//   next_letter(u) the letter of m right after overlap(u)
//   max_label(u)   label of the max-label out-arc of u
//   floor          overlap(u) is empty
//   restricted     max_label(u) < next_letter(u)

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dbseq/graph.hpp"
#include "dbseq/walks.hpp"

namespace dbseq {

struct VertexClass {
  Word overlap;
  Symbol next_letter{};
  Symbol max_label{};
  bool is_floor = false;
  bool is_restricted = false;
};

struct MaxArcCycle {
  std::vector<VertexId> vertices;  // in arc order, starting at the smallest id
  Word label;                      // max_label of each vertex in that order
};

// Keeps a pointer to the graph, which must outlive the analysis.
class MaxArcAnalysis {
 public:
  explicit MaxArcAnalysis(const DeBruijnGraph& g);

  const DeBruijnGraph& graph() const noexcept { return *graph_; }
  VertexId root() const noexcept { return graph_->max_vertex(); }

  // Max-label out-arc; nullopt exactly at the root.
  std::optional<ArcId> max_arc(VertexId v) const { return max_arc_.at(v); }
  std::optional<VertexId> successor(VertexId v) const;
  // The arc set ordered by tail vertex, |V| - 1 arcs.
  std::vector<ArcId> arcs() const;
  AvoidSet as_avoid_set() const;

  // Throws invalid_argument for the root.
  const VertexClass& classify(VertexId v) const;
  const Word& overlap(VertexId v) const { return classify(v).overlap; }

  const std::vector<MaxArcCycle>& cycles() const noexcept { return cycles_; }
  bool is_tree() const noexcept { return cycles_.empty(); }
  // Cycle index containing v, if any.
  std::optional<std::size_t> cycle_of(VertexId v) const { return cycle_of_.at(v); }

 private:
  const DeBruijnGraph* graph_;
  std::vector<std::optional<ArcId>> max_arc_;
  std::vector<VertexClass> classes_;
  std::vector<MaxArcCycle> cycles_;
  std::vector<std::optional<std::size_t>> cycle_of_;
};

// Longest word that is a suffix of `u` and a prefix of `m`, shorter than both.
Word longest_overlap(const Word& u, const Word& m);

// Every walk of n+2 arcs inside the subgraph has first label <= last label.
CheckReport check_label_monotonicity(const MaxArcAnalysis& t);
// For every cycle C: |C| divides n+1, u.max_label(u) = l(C)^((n+1)/|C|) for
// each u on C, and C holds as many floor vertices as restricted ones.
CheckReport check_cycle_periods(const MaxArcAnalysis& t);
// For every arc (u,v) with u != m: label <= next_letter(u); a smaller label
// sends v to the floor, an equal one extends the overlap by that label.
CheckReport check_overlap_growth(const MaxArcAnalysis& t);
// Paths of the subgraph from a floor vertex whose vertices, except the
// last, are unrestricted spell the overlap of their endpoint. A restricted
// start is excluded: its arc drops below the next letter and lands on the
// floor again.
CheckReport check_floor_paths(const MaxArcAnalysis& t);
// The restricted vertices of a cycle are spelled by the overlap/max-label
// blocks of the other restricted vertices, in cycle order.
CheckReport check_restricted_cycle_labels(const MaxArcAnalysis& t, std::size_t cycle_index);

struct Block {
  Word prefix;  // a prefix of m
  Symbol drop{};  // strictly below the letter of m after `prefix`

  bool operator==(const Block&) const = default;
};

struct BlockWord {
  Word word;  // concatenation of all blocks
  std::vector<Block> blocks;
};

// Words of the graph's arc set (W_{n+1}) that split into blocks prefix.drop
// with every drop maximal among the arcs leaving the vertex that ends at it.
// Found by brute force over block boundaries, independently of the subgraph.
std::vector<BlockWord> enumerate_block_words(const DeBruijnGraph& g);

struct Decision {
  bool answer = false;          // the greedy walk from m is Eulerian
  bool via_tree = false;        // subgraph has no cycle
  bool via_blocks = false;      // no block-decomposable word
  bool via_walk = false;        // running the greedy walk
  std::vector<MaxArcCycle> cycles;
  std::vector<BlockWord> block_words;
};

// Throws internal_inconsistency if the three criteria disagree.
Decision decide_minimal_is_eulerian(const DeBruijnGraph& g);

// The full property suite used by `verify`: exhaustion nesting of the greedy
// walk, the five subgraph checks, and the three-way decision.
std::vector<CheckReport> verify_all(const DeBruijnGraph& g);

}  // namespace dbseq
