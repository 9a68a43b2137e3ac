#include "axialkit/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "axialkit/axes.hpp"
#include "axialkit/miyamoto.hpp"
#include "axialkit/union_find.hpp"

namespace axialkit {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DiGraph::DiGraph(std::size_t n) : labels(default_labels(n)), ids(n), out(n) {
  std::iota(ids.begin(), ids.end(), 0);
}

void DiGraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) throw std::out_of_range("edge endpoint out of range");
  out[from].insert(to);
}

std::size_t DiGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : out) n += s.size();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> DiGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::size_t w : out[v]) e.emplace_back(v, w);
  }
  return e;
}

UGraph::UGraph(std::size_t n) : labels(default_labels(n)), adj(n) {}

void UGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw std::out_of_range("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("loops are not allowed");
  adj[a].insert(b);
  adj[b].insert(a);
}

std::vector<std::pair<std::size_t, std::size_t>> UGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : adj[a]) {
      if (a < b) e.emplace_back(a, b);
    }
  }
  return e;
}

DiGraph projection_graph(const AxialAlgebra& alg) {
  const auto& axes = alg.axes();
  DiGraph g(axes.size());
  g.labels = alg.axis_names();
  for (std::size_t b = 0; b < axes.size(); ++b) {
    const Eigendecomposition dec = eigendecompose(alg.algebra(), axes[b], alg.law());
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (a != b && !project(dec, axes[a]).phi.is_zero()) g.add_edge(a, b);
    }
  }
  return g;
}

DiGraph orbit_projection_graph(const DiGraph& g, const std::vector<std::vector<std::size_t>>& orbits) {
  std::vector<std::size_t> orbit_of(g.size(), g.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (std::size_t v : orbits[o]) {
      if (v >= g.size() || orbit_of[v] != g.size()) throw std::invalid_argument("orbits do not partition the vertices");
      orbit_of[v] = o;
    }
  }
  if (std::find(orbit_of.begin(), orbit_of.end(), g.size()) != orbit_of.end()) {
    throw std::invalid_argument("orbits do not cover the vertices");
  }
  DiGraph q(orbits.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    q.labels[o] = g.labels[orbits[o].front()] + "^G";
    q.ids[o] = orbits[o].front();
  }
  for (const auto& [v, w] : g.edges()) q.add_edge(orbit_of[v], orbit_of[w]);
  return q;
}

DiGraph out_graph(const DiGraph& g, std::span<const std::size_t> seed) {
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t v : seed) {
    if (v >= g.size()) throw std::out_of_range("seed vertex out of range");
    if (!seen[v]) {
      seen[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> keep, index(g.size(), g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (seen[v]) {
      index[v] = keep.size();
      keep.push_back(v);
    }
  }
  DiGraph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    sub.labels[i] = g.labels[keep[i]];
    sub.ids[i] = g.ids[keep[i]];
    for (std::size_t w : g.out[keep[i]]) sub.add_edge(i, index[w]);
  }
  return sub;
}

SccResult scc(const DiGraph& g) {
  // Kosaraju with explicit stacks.
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> rev(n);
  for (const auto& [v, w] : g.edges()) rev[w].push_back(v);

  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::set<std::size_t>::const_iterator>> stack;
    seen[s] = true;
    stack.emplace_back(s, g.out[s].begin());
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      if (it == g.out[v].end()) {
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      const std::size_t w = *it++;
      if (!seen[w]) {
        seen[w] = true;
        stack.emplace_back(w, g.out[w].begin());
      }
    }
  }

  std::vector<std::size_t> comp(n, n);
  SccResult out;
  for (auto r = order.rbegin(); r != order.rend(); ++r) {
    if (comp[*r] != n) continue;
    const std::size_t c = out.components.size();
    out.components.emplace_back();
    std::vector<std::size_t> stack{*r};
    comp[*r] = c;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      out.components[c].push_back(v);
      for (std::size_t w : rev[v]) {
        if (comp[w] == n) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  for (auto& c : out.components) std::sort(c.begin(), c.end());
  std::sort(out.components.begin(), out.components.end());
  out.strongly_connected = out.components.size() == 1;
  return out;
}

DeltaGraph nonannihilating_graph(const AxialAlgebra& alg) {
  const auto& axes = alg.axes();
  DeltaGraph out{UGraph(axes.size()), {}};
  out.graph.labels = alg.axis_names();
  UnionFind uf(axes.size());
  for (std::size_t a = 0; a < axes.size(); ++a) {
    for (std::size_t b = a + 1; b < axes.size(); ++b) {
      if (!is_zero(alg.algebra().multiply(axes[a], axes[b]))) {
        out.graph.add_edge(a, b);
        uf.unite(a, b);
      }
    }
  }
  out.components = uf.components();
  return out;
}

std::vector<std::size_t> ideal_axis_propagation(const AxialAlgebra& alg, const Subspace& ideal) {
  const auto& axes = alg.axes();
  std::vector<std::size_t> seed;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const Subspace one = eigendecompose(alg.algebra(), axes[a], alg.law()).part(Rational(1));
    if (!ideal.intersect(one).is_zero()) seed.push_back(a);
  }
  if (seed.empty()) return {};

  std::vector<std::vector<std::size_t>> orbits;
  if (alg.law().grading()) {
    orbits = axis_orbits(alg);
  } else {
    for (std::size_t a = 0; a < axes.size(); ++a) orbits.push_back({a});
  }
  std::vector<std::size_t> orbit_of(axes.size());
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (std::size_t v : orbits[o]) orbit_of[v] = o;
  }
  std::vector<std::size_t> seed_orbits;
  for (std::size_t a : seed) seed_orbits.push_back(orbit_of[a]);

  const DiGraph reach = out_graph(orbit_projection_graph(projection_graph(alg), orbits), seed_orbits);
  // Quotient vertex ids are orbit representatives.
  std::vector<bool> forced(orbits.size(), false);
  for (std::size_t id : reach.ids) forced[orbit_of[id]] = true;
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (forced[orbit_of[a]]) out.push_back(a);
  }
  return out;
}

std::string to_dot(const DiGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) os << "  " << v << " [label=" << quoted(g.labels[v]) << "];\n";
  for (const auto& [v, w] : g.edges()) os << "  " << v << " -> " << w << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const UGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) os << "  " << v << " [label=" << quoted(g.labels[v]) << "];\n";
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace axialkit
