#include "dbseq/counting.hpp"

#include <cmath>

namespace dbseq {

namespace {

// (d - 1)! with the empty product for d = 0.
BigCount degree_factor(std::size_t d) {
  BigCount f = 1;
  for (std::size_t i = 2; i < d; ++i) f *= i;
  return f;
}

}  // namespace

BigCount bareiss_determinant(std::vector<std::vector<BigCount>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  BigCount sign = 1;
  BigCount prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigCount count_converging_trees(const Digraph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw Error(Errc::invalid_argument, "root out of range");
  // Row/column index of each non-root vertex in the reduced Laplacian.
  std::vector<std::size_t> pos(n, n);
  std::size_t next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (v != root) pos[v] = next++;

  std::vector<std::vector<BigCount>> lap(next, std::vector<BigCount>(next, 0));
  for (const Arc& e : g.arcs()) {
    if (e.tail == e.head || e.tail == root) continue;
    lap[pos[e.tail]][pos[e.tail]] += 1;
    if (e.head != root) lap[pos[e.tail]][pos[e.head]] -= 1;
  }
  return bareiss_determinant(std::move(lap));
}

BigCount count_eulerian_circuits(const Digraph& g, VertexId root) {
  if (!g.is_balanced() || !g.is_strongly_connected())
    throw Error(Errc::not_eulerian, "graph is not balanced and strongly connected");
  BigCount count = count_converging_trees(g, root);
  for (VertexId v = 0; v < g.vertex_count(); ++v) count *= degree_factor(g.out_degree(v));
  return count;
}

LowerBoundReport lower_bound_report(const DeBruijnGraph& g) {
  LowerBoundReport r;
  r.vertices = g.vertex_count();
  r.arcs = g.arc_count();
  r.mean_out_degree = static_cast<double>(r.arcs) / static_cast<double>(r.vertices);

  r.factorial_product = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) r.factorial_product *= degree_factor(g.out_degree(v));
  const auto mean_floor = static_cast<std::size_t>(std::floor(r.mean_out_degree));
  r.mean_degree_term = boost::multiprecision::pow(degree_factor(mean_floor),
                                                  static_cast<unsigned>(r.vertices));
  r.converging_trees = count_converging_trees(g, g.max_vertex());
  r.eulerian_circuits = r.converging_trees * r.factorial_product;

  const std::size_t n = g.span();
  try {
    r.growth_rate = estimate_growth_rate(g.language(), n + 1);
  } catch (const Error&) {
    r.growth_rate = 0;
  }
  const double lambda_floor = std::floor(r.growth_rate - 1.0);
  double base = 1;
  for (double i = 2; i <= lambda_floor; ++i) base *= i;
  r.asymptotic_bound = std::pow(base, std::pow(r.growth_rate, static_cast<double>(n) - 1.0));

  if (g.language().forbidden().empty() && g.alphabet().size() == 2 && n >= 1 && n <= 20) {
    BigCount ref = 1;
    ref <<= (std::size_t{1} << (n - 1));
    r.unrestricted_binary_reference = ref.str();
  }
  return r;
}

}  // namespace dbseq
