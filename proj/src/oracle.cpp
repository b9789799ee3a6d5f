#include "dbseq/oracle.hpp"

#include "dbseq/structure.hpp"

namespace dbseq {

namespace {

void require_size(const Digraph& g, std::size_t max_arcs) {
  if (g.arc_count() > max_arcs)
    throw Error(Errc::too_large, "graph has " + std::to_string(g.arc_count()) + " arcs; the oracle bound is " +
                                     std::to_string(max_arcs));
}

// Depth-first search over trails that use each arc at most once. `on_full`
// is called with the complete circuit and returns false to stop the search.
class CircuitSearch {
 public:
  CircuitSearch(const Digraph& g, VertexId start) : g_(g), start_(start), used_(g.arc_count(), false) {}

  template <class OnFull>
  bool run_from(VertexId v, OnFull&& on_full) {
    if (trail_.size() == g_.arc_count()) return v != start_ || on_full(trail_);
    for (ArcId a : g_.out_arcs(v)) {
      if (used_[a]) continue;
      used_[a] = true;
      trail_.push_back(a);
      const bool keep_going = run_from(g_.arc(a).head, on_full);
      trail_.pop_back();
      used_[a] = false;
      if (!keep_going) return false;
    }
    return true;
  }

  void take(ArcId a) {
    used_[a] = true;
    trail_.push_back(a);
  }

 private:
  const Digraph& g_;
  VertexId start_;
  std::vector<bool> used_;
  std::vector<ArcId> trail_;
};

}  // namespace

CircuitList enumerate_eulerian_circuits(const Digraph& g, VertexId start, std::size_t cap, std::size_t max_arcs) {
  require_size(g, max_arcs);
  if (start >= g.vertex_count()) throw Error(Errc::invalid_argument, "start vertex out of range");
  CircuitList out;
  CircuitSearch search(g, start);
  search.run_from(start, [&](const std::vector<ArcId>& trail) {
    if (out.circuits.size() == cap) {
      out.truncated = true;
      return false;
    }
    out.circuits.push_back(Walk{start, trail});
    return true;
  });
  return out;
}

std::uint64_t count_circuits_from_arc(const Digraph& g, ArcId first_arc, std::size_t max_arcs) {
  require_size(g, max_arcs);
  if (first_arc >= g.arc_count()) throw Error(Errc::invalid_argument, "arc out of range");
  const Arc& e = g.arc(first_arc);
  std::uint64_t count = 0;
  CircuitSearch search(g, e.tail);
  search.take(first_arc);
  search.run_from(e.head, [&](const std::vector<ArcId>&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Word> minimal_eulerian_label(const Digraph& g, VertexId start, std::size_t max_arcs) {
  require_size(g, max_arcs);
  if (start >= g.vertex_count()) throw Error(Errc::invalid_argument, "start vertex out of range");
  std::optional<Word> best;
  CircuitSearch search(g, start);
  search.run_from(start, [&](const std::vector<ArcId>& trail) {
    best = Walk{start, trail}.label(g);
    return false;
  });
  return best;
}

std::optional<GlobalMinimum> global_minimal_label(const Digraph& g, std::size_t max_arcs) {
  require_size(g, max_arcs);
  std::optional<GlobalMinimum> best;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto label = minimal_eulerian_label(g, v, max_arcs);
    if (label && (!best || *label < best->label)) best = GlobalMinimum{v, std::move(*label)};
  }
  return best;
}

Verdict certify_minimal_walk(const DeBruijnGraph& g, std::size_t max_arcs) {
  require_size(g, max_arcs);
  Verdict v;
  const Walk greedy = minimal_walk(g);
  v.greedy_label = greedy.label(g);
  v.greedy_eulerian = greedy.is_eulerian(g);
  v.oracle_label = minimal_eulerian_label(g, g.max_vertex(), max_arcs);

  const MaxArcAnalysis t(g);
  v.decision = t.is_tree();
  v.decision_consistent = v.decision == enumerate_block_words(g).empty();
  v.pass = v.decision_consistent && v.greedy_eulerian == v.decision &&
           (!v.greedy_eulerian || (v.oracle_label && *v.oracle_label == v.greedy_label));
  return v;
}

}  // namespace dbseq
