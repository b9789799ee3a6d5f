#pragma once

// Exhaustive ground truth at desk scale. Every entry point refuses graphs
// with more than `max_arcs` arcs (too_large).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dbseq/graph.hpp"
#include "dbseq/walks.hpp"

namespace dbseq {

constexpr std::size_t default_oracle_arcs = 24;

struct CircuitList {
  std::vector<Walk> circuits;  // lexicographic label order
  bool truncated = false;      // cap reached
};

// All Eulerian circuits from `start`, any first arc, by backtracking in
// label order.
CircuitList enumerate_eulerian_circuits(const Digraph& g, VertexId start, std::size_t cap,
                                        std::size_t max_arcs = default_oracle_arcs);

// Number of Eulerian circuits whose first arc is `first_arc`.
std::uint64_t count_circuits_from_arc(const Digraph& g, ArcId first_arc, std::size_t max_arcs = default_oracle_arcs);

// Smallest Eulerian circuit label from `start`: depth-first in label order,
// so the first complete circuit found is the minimum. nullopt when no
// Eulerian circuit exists.
std::optional<Word> minimal_eulerian_label(const Digraph& g, VertexId start,
                                           std::size_t max_arcs = default_oracle_arcs);

struct GlobalMinimum {
  VertexId start = 0;  // smallest id among the starts achieving the minimum
  Word label;
};

std::optional<GlobalMinimum> global_minimal_label(const Digraph& g, std::size_t max_arcs = default_oracle_arcs);

struct Verdict {
  Word greedy_label;
  bool greedy_eulerian = false;
  std::optional<Word> oracle_label;  // minimal Eulerian label from m
  bool decision = false;             // no cycle in the max-label subgraph
  bool decision_consistent = true;   // the block-word criterion agrees
  bool pass = false;
};

// PASS iff the greedy walk is Eulerian exactly when the decision says so,
// both decision criteria agree, and an Eulerian greedy label equals the
// oracle minimum.
Verdict certify_minimal_walk(const DeBruijnGraph& g, std::size_t max_arcs = default_oracle_arcs);

}  // namespace dbseq
