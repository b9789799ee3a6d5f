#pragma once

// Internal: the unrestricted span-n construction, one arc per word of
// W_{n+1}. Vertices are the distinct length-n prefixes and suffixes of those
// words in lexicographic order; arcs are in word order.

#include <cstddef>
#include <vector>

#include "dbseq/language.hpp"
#include "scc.hpp"

namespace dbseq::detail {

struct RawGraph {
  std::vector<Word> vertices;
  std::vector<Word> arc_words;
  std::vector<std::size_t> tails, heads;

  std::vector<std::vector<std::size_t>> successors() const;
};

RawGraph build_raw_graph(const Language& lang, std::size_t span);

}  // namespace dbseq::detail
