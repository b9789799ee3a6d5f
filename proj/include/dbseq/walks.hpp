#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dbseq/graph.hpp"

namespace dbseq {

struct Walk {
  VertexId start = 0;
  std::vector<ArcId> arcs;

  std::size_t size() const noexcept { return arcs.size(); }
  Word label(const Digraph& g) const;
  VertexId end(const Digraph& g) const;
  bool is_closed(const Digraph& g) const { return end(g) == start; }
  // Closed and every arc of g used exactly once.
  bool is_eulerian(const Digraph& g) const;
};

// One chosen out-arc for every vertex except the root. The walk avoiding the
// set only takes the chosen arc of a vertex once every other out-arc there
// has been used.
struct AvoidSet {
  VertexId root = 0;
  std::vector<std::optional<ArcId>> chosen;  // indexed by vertex; empty at root

  // Throws invalid_argument unless every non-root vertex has exactly one
  // arc leaving it and the root has none.
  void validate(const Digraph& g) const;
  std::vector<ArcId> arcs() const;
};

// Hierholzer: the initial cycle and every spliced subcycle follow the
// smallest unused label, splice points taken in discovery order. Throws
// not_eulerian unless g is balanced and strongly connected.
Walk eulerian_cycle(const Digraph& g, VertexId start);

// Stops at the first vertex without an unused out-arc; the result may be
// shorter than the arc count.
Walk walk_avoiding(const Digraph& g, const AvoidSet& avoid);

// Greedy walk from m that always takes the smallest unused out-arc.
Walk minimal_walk(const DeBruijnGraph& g);
// Same rule from any start vertex.
Walk greedy_walk(const Digraph& g, VertexId start);

// Per vertex, the shortest prefix length of `w` after which every arc with
// that vertex as head or tail has been used; nullopt if never exhausted.
std::vector<std::optional<std::size_t>> exhaustion_order(const Walk& w, const Digraph& g);

// Report shared by the property verifiers across modules.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// For every vertex v exhausted by `w` and not on a cycle of the avoid set,
// every vertex whose chosen arcs lead to v is exhausted no later than v.
CheckReport check_exhaustion_nesting(const Digraph& g, const AvoidSet& avoid, const Walk& w);

}  // namespace dbseq
