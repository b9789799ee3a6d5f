#include "dbseq/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dbseq {

Word longest_overlap(const Word& u, const Word& m) {
  const std::size_t limit = std::min(u.size(), m.size());
  for (std::size_t len = limit; len-- > 0;) {
    if (std::equal(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(len),
                   u.end() - static_cast<std::ptrdiff_t>(len)))
      return Word(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(len));
  }
  return {};
}

MaxArcAnalysis::MaxArcAnalysis(const DeBruijnGraph& g) : graph_(&g) {
  const std::size_t n = g.vertex_count();
  const VertexId m = g.max_vertex();
  const Word& root_label = g.label(m);

  max_arc_.resize(n);
  classes_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    if (v == m) continue;
    auto out = g.out_arcs(v);
    max_arc_[v] = out.back();
    VertexClass& c = classes_[v];
    c.overlap = longest_overlap(g.label(v), root_label);
    c.next_letter = root_label[c.overlap.size()];
    c.max_label = g.arc(out.back()).label;
    c.is_floor = c.overlap.empty();
    c.is_restricted = c.max_label < c.next_letter;
  }

  // Functional-graph cycle scan.
  cycle_of_.assign(n, std::nullopt);
  std::vector<int> state(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    std::vector<VertexId> path;
    std::optional<VertexId> v = s;
    while (v && state[*v] == 0) {
      state[*v] = 1;
      path.push_back(*v);
      v = successor(*v);
    }
    if (v && state[*v] == 1) {
      auto first = std::find(path.begin(), path.end(), *v);
      std::vector<VertexId> cyc(first, path.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      MaxArcCycle c{cyc, {}};
      for (VertexId u : cyc) c.label.push_back(classes_[u].max_label);
      for (VertexId u : cyc) cycle_of_[u] = cycles_.size();
      cycles_.push_back(std::move(c));
    }
    for (VertexId p : path) state[p] = 2;
  }
  std::vector<std::size_t> order(cycles_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cycles_[a].vertices.front() < cycles_[b].vertices.front(); });
  std::vector<MaxArcCycle> sorted;
  std::vector<std::size_t> new_index(cycles_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    sorted.push_back(std::move(cycles_[order[i]]));
  }
  cycles_ = std::move(sorted);
  for (auto& c : cycle_of_)
    if (c) c = new_index[*c];
}

std::optional<VertexId> MaxArcAnalysis::successor(VertexId v) const {
  const auto& a = max_arc_.at(v);
  if (!a) return std::nullopt;
  return graph_->arc(*a).head;
}

std::vector<ArcId> MaxArcAnalysis::arcs() const {
  std::vector<ArcId> out;
  for (const auto& a : max_arc_)
    if (a) out.push_back(*a);
  return out;
}

AvoidSet MaxArcAnalysis::as_avoid_set() const { return AvoidSet{root(), max_arc_}; }

const VertexClass& MaxArcAnalysis::classify(VertexId v) const {
  if (v >= classes_.size()) throw Error(Errc::invalid_argument, "vertex out of range");
  if (v == root())
    throw Error(Errc::invalid_argument, "the root '" + graph_->name(v) + "' has no max-label arc or overlap");
  return classes_[v];
}

namespace {

Word repeat(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string show(const Alphabet& a, const Word& w) { return w.empty() ? std::string("ε") : a.render(w); }

}  // namespace

CheckReport check_label_monotonicity(const MaxArcAnalysis& t) {
  const auto& g = t.graph();
  const std::size_t steps = g.span() + 2;
  CheckReport report{"label-monotonicity", 0, {}};
  for (VertexId v0 = 0; v0 < g.vertex_count(); ++v0) {
    std::vector<Symbol> labels;
    std::optional<VertexId> v = v0;
    while (labels.size() < steps && v && t.max_arc(*v)) {
      labels.push_back(g.arc(*t.max_arc(*v)).label);
      v = t.successor(*v);
    }
    if (labels.size() < steps) continue;
    ++report.checked;
    if (labels.front() > labels.back()) {
      report.violations.push_back("walk from '" + g.name(v0) + "': first label " + g.alphabet().render(labels.front()) +
                                  " > label " + g.alphabet().render(labels.back()) + " after n+1 steps");
    }
  }
  return report;
}

CheckReport check_cycle_periods(const MaxArcAnalysis& t) {
  const auto& g = t.graph();
  const std::size_t word_len = g.span() + 1;
  CheckReport report{"cycle-periods", 0, {}};
  for (const auto& c : t.cycles()) {
    const std::size_t len = c.vertices.size();
    ++report.checked;
    if (word_len % len != 0) {
      report.violations.push_back("cycle through '" + g.name(c.vertices.front()) + "' has length " +
                                  std::to_string(len) + " not dividing " + std::to_string(word_len));
      continue;
    }
    for (std::size_t j = 0; j < len; ++j) {
      // The cycle read from the successor of u, ending with u's own arc.
      Word rotated = rotate_left(c.label, (j + 1) % len);
      Word expect = repeat(rotated, word_len / len);
      Word actual = g.label(c.vertices[j]);
      actual.push_back(c.label[j]);
      ++report.checked;
      if (actual != expect)
        report.violations.push_back("on cycle vertex '" + g.name(c.vertices[j]) + "': " + show(g.alphabet(), actual) +
                                    " != " + show(g.alphabet(), expect));
    }
    std::size_t floors = 0, restricted = 0;
    for (VertexId u : c.vertices) {
      floors += t.classify(u).is_floor;
      restricted += t.classify(u).is_restricted;
    }
    ++report.checked;
    if (floors != restricted)
      report.violations.push_back("cycle through '" + g.name(c.vertices.front()) + "' has " + std::to_string(floors) +
                                  " floor but " + std::to_string(restricted) + " restricted vertices");
  }
  return report;
}

CheckReport check_overlap_growth(const MaxArcAnalysis& t) {
  const auto& g = t.graph();
  CheckReport report{"overlap-growth", 0, {}};
  for (const Arc& e : g.arcs()) {
    if (e.tail == t.root()) continue;
    const VertexClass& cu = t.classify(e.tail);
    const std::string where = "arc " + g.name(e.tail) + " -" + g.alphabet().render(e.label) + "-> " + g.name(e.head);
    ++report.checked;
    if (e.label > cu.next_letter) {
      report.violations.push_back(where + ": label exceeds next letter " + g.alphabet().render(cu.next_letter));
      continue;
    }
    // The overlap of m itself is not defined.
    if (e.head == t.root()) continue;
    const Word& gv = t.overlap(e.head);
    ++report.checked;
    if (e.label < cu.next_letter && !gv.empty()) {
      report.violations.push_back(where + ": smaller label but head overlap is " + show(g.alphabet(), gv));
    } else if (e.label == cu.next_letter) {
      Word expect = cu.overlap;
      expect.push_back(e.label);
      if (gv != expect)
        report.violations.push_back(where + ": head overlap " + show(g.alphabet(), gv) + " != " +
                                    show(g.alphabet(), expect));
    }
  }
  return report;
}

CheckReport check_floor_paths(const MaxArcAnalysis& t) {
  const auto& g = t.graph();
  CheckReport report{"floor-paths", 0, {}};
  for (VertexId f = 0; f < g.vertex_count(); ++f) {
    if (f == t.root() || !t.classify(f).is_floor) continue;
    ++report.checked;  // the empty path; the floor condition itself
    std::vector<bool> on_path(g.vertex_count(), false);
    on_path[f] = true;
    Word label;
    VertexId cur = f;
    for (;;) {
      if (t.classify(cur).is_restricted) break;
      auto next = t.successor(cur);
      if (!next || on_path[*next]) break;
      label.push_back(t.classify(cur).max_label);
      on_path[*next] = true;
      cur = *next;
      if (cur == t.root()) break;
      ++report.checked;
      if (t.overlap(cur) != label)
        report.violations.push_back("path from '" + g.name(f) + "' to '" + g.name(cur) + "' spells " +
                                    show(g.alphabet(), label) + " but the overlap is " +
                                    show(g.alphabet(), t.overlap(cur)));
    }
  }
  return report;
}

CheckReport check_restricted_cycle_labels(const MaxArcAnalysis& t, std::size_t cycle_index) {
  const auto& g = t.graph();
  const auto& c = t.cycles().at(cycle_index);
  CheckReport report{"restricted-cycle-labels", 0, {}};
  const std::size_t word_len = g.span() + 1;
  const std::size_t len = c.vertices.size();

  std::vector<VertexId> restricted;
  for (VertexId u : c.vertices)
    if (t.classify(u).is_restricted) restricted.push_back(u);
  const std::size_t k = restricted.size();
  ++report.checked;
  if (k == 0) {
    report.violations.push_back("cycle through '" + g.name(c.vertices.front()) + "' has no restricted vertex");
    return report;
  }
  if (word_len % len != 0) {
    report.violations.push_back("cycle length " + std::to_string(len) + " does not divide " + std::to_string(word_len));
    return report;
  }
  for (std::size_t i = 0; i < k; ++i) {
    // Blocks overlap(u^j).max_label(u^j) for j = i+1, ..., i (mod k) spell the
    // cycle read after u^i; its (n+1)/|C|-th power minus the final letter is u^i.
    Word round;
    for (std::size_t s = 1; s <= k; ++s) {
      const VertexClass& cj = t.classify(restricted[(i + s) % k]);
      round = concat(std::move(round), cj.overlap);
      round.push_back(cj.max_label);
    }
    Word expect = repeat(round, word_len / len);
    if (!expect.empty()) expect.pop_back();
    ++report.checked;
    if (expect != g.label(restricted[i]))
      report.violations.push_back("restricted vertex '" + g.name(restricted[i]) + "' but blocks spell " +
                                  show(g.alphabet(), expect));
  }
  return report;
}

std::vector<BlockWord> enumerate_block_words(const DeBruijnGraph& g) {
  const Word& m = g.label(g.max_vertex());
  const std::size_t n = g.span();
  std::set<Word> words;
  for (ArcId a = 0; a < g.arc_count(); ++a) words.insert(arc_to_word(g, a));

  std::vector<BlockWord> out;
  for (const Word& w : words) {
    const std::size_t len = w.size();
    // A block may end at position e when the rotation of w ending there
    // cannot be continued by any larger letter from its length-n prefix.
    std::vector<bool> maximal_end(len, true);
    for (std::size_t e = 0; e < len; ++e) {
      Word rot = rotate_left(w, e + 1);
      const Symbol last = rot.back();
      for (std::size_t b = index_of(last) + 1; b < g.alphabet().size(); ++b) {
        rot.back() = symbol_at(b);
        if (words.count(rot)) {
          maximal_end[e] = false;
          break;
        }
      }
    }

    std::vector<Block> blocks;
    std::function<bool(std::size_t)> split = [&](std::size_t pos) -> bool {
      if (pos == len) return true;
      for (std::size_t end = pos; end < len; ++end) {
        const std::size_t hlen = end - pos;
        if (hlen >= n) break;
        if (!std::equal(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end),
                        m.begin()))
          break;  // longer blocks share this non-prefix
        if (!(w[end] < m[hlen]) || !maximal_end[end]) continue;
        blocks.push_back({Word(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end)),
                          w[end]});
        if (split(end + 1)) return true;
        blocks.pop_back();
      }
      return false;
    };
    if (split(0)) out.push_back({w, blocks});
  }
  return out;
}

Decision decide_minimal_is_eulerian(const DeBruijnGraph& g) {
  MaxArcAnalysis t(g);
  Decision d;
  d.via_tree = t.is_tree();
  d.block_words = enumerate_block_words(g);
  d.via_blocks = d.block_words.empty();
  d.via_walk = minimal_walk(g).is_eulerian(g);
  d.answer = d.via_tree;
  d.cycles = t.cycles();
  if (d.via_tree != d.via_blocks || d.via_tree != d.via_walk) {
    std::ostringstream msg;
    msg << "criteria disagree: tree=" << d.via_tree << " blocks-empty=" << d.via_blocks
        << " walk-eulerian=" << d.via_walk;
    throw Error(Errc::internal_inconsistency, msg.str());
  }
  return d;
}

std::vector<CheckReport> verify_all(const DeBruijnGraph& g) {
  MaxArcAnalysis t(g);
  std::vector<CheckReport> reports;

  const AvoidSet avoid = t.as_avoid_set();
  const Walk avoiding = walk_avoiding(g, avoid);
  reports.push_back(check_exhaustion_nesting(g, avoid, avoiding));
  reports.push_back(check_label_monotonicity(t));
  reports.push_back(check_cycle_periods(t));
  reports.push_back(check_overlap_growth(t));
  reports.push_back(check_floor_paths(t));

  CheckReport cycles{"restricted-cycle-labels", 0, {}};
  for (std::size_t i = 0; i < t.cycles().size(); ++i) {
    auto r = check_restricted_cycle_labels(t, i);
    cycles.checked += r.checked;
    cycles.violations.insert(cycles.violations.end(), r.violations.begin(), r.violations.end());
  }
  reports.push_back(std::move(cycles));

  CheckReport agreement{"decision-agreement", 0, {}};
  ++agreement.checked;
  if (avoiding.arcs != minimal_walk(g).arcs)
    agreement.violations.push_back("walk avoiding the max-label subgraph differs from the greedy walk");
  ++agreement.checked;
  try {
    decide_minimal_is_eulerian(g);
  } catch (const Error& e) {
    if (e.code() != Errc::internal_inconsistency) throw;
    agreement.violations.push_back(e.what());
  }
  reports.push_back(std::move(agreement));
  return reports;
}

}  // namespace dbseq
