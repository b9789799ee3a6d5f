#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dbseq/graph.hpp"

namespace dbseq {

using BigCount = boost::multiprecision::cpp_int;

// Spanning trees in which every vertex has a directed path to `root`:
// det of the out-degree Laplacian (self-loops dropped, parallel arcs
// counted) with the root row and column removed, by fraction-free
// elimination.
BigCount count_converging_trees(const Digraph& g, VertexId root);

// Eulerian circuits counted from a fixed starting arc:
// trees(root) * prod_v (outdeg(v) - 1)!. Throws not_eulerian.
BigCount count_eulerian_circuits(const Digraph& g, VertexId root);

// Exact determinant of a square integer matrix (Bareiss).
BigCount bareiss_determinant(std::vector<std::vector<BigCount>> matrix);

struct LowerBoundReport {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  double mean_out_degree = 0;
  BigCount factorial_product;  // prod_v (outdeg(v) - 1)!
  BigCount mean_degree_term;   // ((floor(mean) - 1)!)^|V|
  BigCount converging_trees;   // at the max vertex
  BigCount eulerian_circuits;
  double growth_rate = 0;      // |W_{n+1}| / |W_n|
  double asymptotic_bound = 0; // floor(lambda - 1)! ^ (lambda^(n-1)), documentation only
  // 2^(2^(n-1)), the tree count quoted for the unrestricted binary case;
  // empty for other languages.
  std::string unrestricted_binary_reference;
};

LowerBoundReport lower_bound_report(const DeBruijnGraph& g);

}  // namespace dbseq
