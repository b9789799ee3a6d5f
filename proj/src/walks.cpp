#include "dbseq/walks.hpp"

#include <algorithm>
#include <list>
#include <sstream>

namespace dbseq {

Word Walk::label(const Digraph& g) const {
  Word w;
  w.reserve(arcs.size());
  for (ArcId a : arcs) w.push_back(g.arc(a).label);
  return w;
}

VertexId Walk::end(const Digraph& g) const { return arcs.empty() ? start : g.arc(arcs.back()).head; }

bool Walk::is_eulerian(const Digraph& g) const {
  if (arcs.size() != g.arc_count() || !is_closed(g)) return false;
  std::vector<bool> used(g.arc_count(), false);
  VertexId v = start;
  for (ArcId a : arcs) {
    if (used[a] || g.arc(a).tail != v) return false;
    used[a] = true;
    v = g.arc(a).head;
  }
  return true;
}

void AvoidSet::validate(const Digraph& g) const {
  if (root >= g.vertex_count()) throw Error(Errc::invalid_argument, "avoid-set root out of range");
  if (chosen.size() != g.vertex_count())
    throw Error(Errc::invalid_argument, "avoid set must name one entry per vertex");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == root) {
      if (chosen[v]) throw Error(Errc::invalid_argument, "the root must not have a chosen arc");
      continue;
    }
    if (!chosen[v]) throw Error(Errc::invalid_argument, "vertex '" + g.name(v) + "' has no chosen arc");
    if (*chosen[v] >= g.arc_count() || g.arc(*chosen[v]).tail != v)
      throw Error(Errc::invalid_argument, "chosen arc of '" + g.name(v) + "' does not leave it");
  }
}

std::vector<ArcId> AvoidSet::arcs() const {
  std::vector<ArcId> out;
  for (const auto& a : chosen)
    if (a) out.push_back(*a);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Smallest-label unused out-arc of v, if any.
std::optional<ArcId> next_unused(const Digraph& g, VertexId v, const std::vector<bool>& used) {
  for (ArcId a : g.out_arcs(v))
    if (!used[a]) return a;
  return std::nullopt;
}

}  // namespace

Walk eulerian_cycle(const Digraph& g, VertexId start) {
  if (start >= g.vertex_count()) throw Error(Errc::invalid_argument, "start vertex out of range");
  if (!g.is_balanced()) throw Error(Errc::not_eulerian, "graph is not balanced (in-degree differs from out-degree)");
  if (!g.is_strongly_connected()) throw Error(Errc::not_eulerian, "graph is not strongly connected");

  std::vector<bool> used(g.arc_count(), false);
  // Greedy closed trail from v; in a balanced graph it can only get stuck at v.
  auto trail_from = [&](VertexId v) {
    std::list<ArcId> trail;
    VertexId cur = v;
    while (auto a = next_unused(g, cur, used)) {
      used[*a] = true;
      trail.push_back(*a);
      cur = g.arc(*a).head;
    }
    return trail;
  };

  std::list<ArcId> circuit = trail_from(start);
  for (auto pos = circuit.begin(); pos != circuit.end(); ++pos) {
    const VertexId v = g.arc(*pos).tail;
    if (!next_unused(g, v, used)) continue;
    auto sub = trail_from(v);
    auto first = sub.begin();
    circuit.splice(pos, sub);
    pos = first;
  }

  Walk w{start, {circuit.begin(), circuit.end()}};
  if (w.size() != g.arc_count()) throw Error(Errc::internal_inconsistency, "Hierholzer left arcs unused");
  return w;
}

Walk walk_avoiding(const Digraph& g, const AvoidSet& avoid) {
  avoid.validate(g);
  std::vector<bool> used(g.arc_count(), false);
  Walk w{avoid.root, {}};
  VertexId v = avoid.root;
  for (;;) {
    std::optional<ArcId> pick;
    for (ArcId a : g.out_arcs(v)) {
      if (!used[a] && a != avoid.chosen[v]) {
        pick = a;
        break;
      }
    }
    if (!pick && avoid.chosen[v] && !used[*avoid.chosen[v]]) pick = avoid.chosen[v];
    if (!pick) break;
    used[*pick] = true;
    w.arcs.push_back(*pick);
    v = g.arc(*pick).head;
  }
  return w;
}

Walk greedy_walk(const Digraph& g, VertexId start) {
  if (start >= g.vertex_count()) throw Error(Errc::invalid_argument, "start vertex out of range");
  std::vector<bool> used(g.arc_count(), false);
  Walk w{start, {}};
  VertexId v = start;
  while (auto a = next_unused(g, v, used)) {
    used[*a] = true;
    w.arcs.push_back(*a);
    v = g.arc(*a).head;
  }
  return w;
}

Walk minimal_walk(const DeBruijnGraph& g) { return greedy_walk(g, g.max_vertex()); }

std::vector<std::optional<std::size_t>> exhaustion_order(const Walk& w, const Digraph& g) {
  std::vector<std::size_t> remaining(g.vertex_count(), 0);
  for (const Arc& e : g.arcs()) {
    ++remaining[e.tail];
    if (e.head != e.tail) ++remaining[e.head];
  }
  std::vector<std::optional<std::size_t>> order(g.vertex_count());
  auto touch = [&](VertexId v, std::size_t step) {
    if (--remaining[v] == 0) order[v] = step;
  };
  for (std::size_t i = 0; i < w.arcs.size(); ++i) {
    const Arc& e = g.arc(w.arcs[i]);
    touch(e.tail, i + 1);
    if (e.head != e.tail) touch(e.head, i + 1);
  }
  return order;
}

CheckReport check_exhaustion_nesting(const Digraph& g, const AvoidSet& avoid, const Walk& w) {
  avoid.validate(g);
  CheckReport report{"exhaustion-nesting", 0, {}};
  const std::size_t n = g.vertex_count();

  auto successor = [&](VertexId v) -> std::optional<VertexId> {
    if (!avoid.chosen[v]) return std::nullopt;
    return g.arc(*avoid.chosen[v]).head;
  };

  // Vertices on a cycle of the functional graph v -> head(chosen[v]).
  std::vector<bool> on_cycle(n, false);
  std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
  for (VertexId s = 0; s < n; ++s) {
    std::vector<VertexId> path;
    std::optional<VertexId> v = s;
    while (v && state[*v] == 0) {
      state[*v] = 1;
      path.push_back(*v);
      v = successor(*v);
    }
    if (v && state[*v] == 1) {
      for (auto it = std::find(path.begin(), path.end(), *v); it != path.end(); ++it) on_cycle[*it] = true;
    }
    for (VertexId p : path) state[p] = 2;
  }

  const auto order = exhaustion_order(w, g);
  for (VertexId u = 0; u < n; ++u) {
    // u belongs to the subtree of every vertex on its chosen path until a cycle.
    std::optional<VertexId> v = u;
    while (v && !on_cycle[*v]) {
      if (order[*v]) {
        ++report.checked;
        if (!order[u] || *order[u] > *order[*v]) {
          std::ostringstream msg;
          msg << "'" << g.name(*v) << "' exhausted at step " << *order[*v] << " but '" << g.name(u) << "' "
              << (order[u] ? "only at step " + std::to_string(*order[u]) : std::string("never"));
          report.violations.push_back(msg.str());
        }
      }
      v = successor(*v);
    }
  }
  return report;
}

}  // namespace dbseq
