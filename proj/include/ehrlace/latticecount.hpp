#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrlace/polynomial.hpp"

namespace ehrlace {

// Undirected simple graph; vertices are 0-indexed. Text format:
//   first line "n m", then m lines "u v", optional line "bipartition a b".
// Named built-ins: tree:d (path on d+1 vertices), cycle:n, complete:n,
// kab:a,b.
struct GraphSpec {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::optional<std::pair<int, int>> bipartition;

  static GraphSpec parse(const std::string& spec);
  static GraphSpec from_text(const std::string& text);
  static GraphSpec path(int num_edges);
  static GraphSpec cycle(int n);
  static GraphSpec complete(int n);
  static GraphSpec complete_bipartite(int a, int b);

  int num_components() const;
  void validate() const;
};

// Default ceiling on stored DP points; EHRLACE_BUDGET overrides it.
uint64_t default_point_budget();

// |s P_G| for the symmetric edge polytope of g, counted by budgeted
// generation from the degree-one lattice points (the 2|E| edge vectors and
// the origin). Throws OverBudget when the stored point set would exceed
// the budget.
uint64_t count_dilate(const GraphSpec& g, long s,
                      uint64_t budget = default_point_budget());

// Counts for every s = 0..s_max in one expansion.
std::vector<uint64_t> count_dilates_upto(const GraphSpec& g, long s_max,
                                         uint64_t budget = default_point_budget());

// Unique polynomial of degree |V| - #components through the counts at
// s = 0..degree, cross-checked at degree + 1; InterpolationMismatch means
// the degree or decomposition assumption failed.
Polynomial ehrhart_interpolate(const GraphSpec& g,
                               uint64_t budget = default_point_budget());

enum class VertexType { In, Out, Zero };

// Query for the number of correct (a,b)-bipartite weighted digraphs with
// total edge weight k. `typed` restricts the in/out/zero status of the
// third and second vertex of the b-part (so b >= 3 when set).
struct CorrectGraphQuery {
  int a = 1;
  int b = 1;
  long k = 0;
  std::optional<std::pair<VertexType, VertexType>> typed;  // (w3, w2)
};

BigInt count_correct_graphs(const CorrectGraphQuery& q);

// f(a, b, k) with the parts in oracle order (a-part carries the v labels).
BigInt correct_graph_count(int a, int b, long k);

// sum_{j<=k} f(a,b,j) == H_{a,b}(k) for all k <= k_max (closed forms exist
// for a <= 3).
bool verify_corollary_counts(int a, int b, long k_max);

}  // namespace ehrlace
