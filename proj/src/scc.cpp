#include "scc.hpp"

#include <algorithm>
#include <limits>

namespace dbseq::detail {

Components strong_components(const std::vector<std::vector<std::size_t>>& successors) {
  constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = successors.size();

  Components out;
  out.component_of.assign(n, unvisited);

  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = successors[f.vertex];
      if (f.edge < succ.size()) {
        std::size_t w = succ[f.edge++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.vertex] = std::min(low[f.vertex], index[w]);
        }
        continue;
      }
      std::size_t v = f.vertex;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component_of[w] = out.count;
        } while (w != v);
        ++out.count;
      }
    }
  }
  return out;
}

ComponentChoice largest_component(const Components& comps, const std::vector<std::size_t>& tails,
                                  const std::vector<std::size_t>& heads) {
  std::vector<std::size_t> arcs(comps.count, 0);
  for (std::size_t a = 0; a < tails.size(); ++a) {
    std::size_t c = comps.component_of[tails[a]];
    if (c == comps.component_of[heads[a]]) ++arcs[c];
  }
  ComponentChoice choice;
  for (std::size_t c = 0; c < comps.count; ++c) {
    if (arcs[c] == 0) continue;
    ++choice.nonempty;
    if (arcs[c] > choice.arcs) {
      choice.winner = c;
      choice.arcs = arcs[c];
      choice.tied = false;
    } else if (arcs[c] == choice.arcs) {
      choice.tied = true;
    }
  }
  return choice;
}

}  // namespace dbseq::detail
