#pragma once

// Internal: strongly connected components over a plain adjacency list.

#include <cstddef>
#include <vector>

namespace dbseq::detail {

struct Components {
  std::vector<std::size_t> component_of;  // per vertex
  std::size_t count = 0;
};

// Iterative Tarjan. Component ids are assigned in order of completion.
Components strong_components(const std::vector<std::vector<std::size_t>>& successors);

// Selects the component with the most internal arcs. Returns the number of
// components holding at least one arc; `winner` is set to the best one and
// `tied` reports whether another component has the same arc count.
struct ComponentChoice {
  std::size_t winner = 0;
  std::size_t arcs = 0;
  std::size_t nonempty = 0;
  bool tied = false;
};

ComponentChoice largest_component(const Components& comps, const std::vector<std::size_t>& tails,
                                  const std::vector<std::size_t>& heads);

}  // namespace dbseq::detail
