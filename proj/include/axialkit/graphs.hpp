#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/subspace.hpp"

namespace axialkit {

// Directed graph on vertices 0..n-1. ids[v] is the vertex in the graph this
// one was derived from (identity for freshly built graphs).
struct DiGraph {
  std::vector<std::string> labels;
  std::vector<std::size_t> ids;
  std::vector<std::set<std::size_t>> out;

  explicit DiGraph(std::size_t n = 0);
  std::size_t size() const { return out.size(); }
  void add_edge(std::size_t from, std::size_t to);
  bool has_edge(std::size_t from, std::size_t to) const { return out.at(from).count(to) > 0; }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

// Undirected simple graph without loops.
struct UGraph {
  std::vector<std::string> labels;
  std::vector<std::set<std::size_t>> adj;

  explicit UGraph(std::size_t n = 0);
  std::size_t size() const { return adj.size(); }
  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const { return adj.at(a).count(b) > 0; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // a < b
};

// a -> b for distinct axes iff the 1-component of a along b is nonzero.
DiGraph projection_graph(const AxialAlgebra& alg);

// Quotient by a vertex partition; self-loops are kept. ids[o] is the
// first listed member of orbit o.
DiGraph orbit_projection_graph(const DiGraph& g, const std::vector<std::vector<std::size_t>>& orbits);

// Induced subgraph on everything reachable from seed.
DiGraph out_graph(const DiGraph& g, std::span<const std::size_t> seed);

struct SccResult {
  std::vector<std::vector<std::size_t>> components;  // each sorted, ordered by smallest vertex
  bool strongly_connected = false;
};

// Self-loops play no role.
SccResult scc(const DiGraph& g);

struct DeltaGraph {
  UGraph graph;
  std::vector<std::vector<std::size_t>> components;  // axis indices, ordered by smallest
};

// a ~ b for distinct axes with ab != 0.
DeltaGraph nonannihilating_graph(const AxialAlgebra& alg);

// Axes that the ideal is forced to contain: axes a with ideal n A_1(a) != 0,
// closed under orbits and reachability in the orbit projection graph.
std::vector<std::size_t> ideal_axis_propagation(const AxialAlgebra& alg, const Subspace& ideal);

std::string to_dot(const DiGraph& g, const std::string& name);
std::string to_dot(const UGraph& g, const std::string& name);

}  // namespace axialkit
