#include "coxir/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace coxir {

SimpleGraph::SimpleGraph(std::vector<std::string> vertices,
                         std::vector<std::pair<std::string, std::string>> edges)
    : labels_(std::move(vertices)) {
  const int n = vertex_count();
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(labels_[static_cast<std::size_t>(i)], i).second)
      throw std::invalid_argument("SimpleGraph: duplicate vertex label '" +
                                  labels_[static_cast<std::size_t>(i)] + "'");
  }

  std::set<std::pair<int, int>> seen;
  for (const auto& [la, lb] : edges) {
    auto ia = index.find(la);
    auto ib = index.find(lb);
    if (ia == index.end() || ib == index.end())
      throw std::invalid_argument("SimpleGraph: edge endpoint is not a vertex");
    int a = ia->second, b = ib->second;
    if (a == b) throw std::invalid_argument("SimpleGraph: loop at '" + la + "'");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("SimpleGraph: repeated edge {" + la + "," + lb + "}");
  }
  edges_.assign(seen.begin(), seen.end());

  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [a, b] : edges_) {
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<int> SimpleGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

bool SimpleGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair<int, int>{a, b});
}

ComponentMap components(const SimpleGraph& g) {
  const int n = g.vertex_count();
  ComponentMap cm;
  cm.of_vertex.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (cm.of_vertex[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = cm.count++;
    std::queue<int> frontier;
    frontier.push(start);
    cm.of_vertex[static_cast<std::size_t>(start)] = id;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        if (cm.of_vertex[static_cast<std::size_t>(w)] < 0) {
          cm.of_vertex[static_cast<std::size_t>(w)] = id;
          frontier.push(w);
        }
      }
    }
  }
  return cm;
}

CircuitBasis spanning_forest(const SimpleGraph& g) {
  const int n = g.vertex_count();
  CircuitBasis basis;
  basis.component_map.assign(static_cast<std::size_t>(n), -1);
  basis.parent.assign(static_cast<std::size_t>(n), -1);

  std::set<std::pair<int, int>> forest;
  for (int start = 0; start < n; ++start) {
    if (basis.component_map[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = basis.component_count++;
    std::queue<int> frontier;
    frontier.push(start);
    basis.component_map[static_cast<std::size_t>(start)] = id;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {  // index order
        if (basis.component_map[static_cast<std::size_t>(w)] < 0) {
          basis.component_map[static_cast<std::size_t>(w)] = id;
          basis.parent[static_cast<std::size_t>(w)] = v;
          forest.insert({std::min(v, w), std::max(v, w)});
          frontier.push(w);
        }
      }
    }
  }
  basis.forest_edges.assign(forest.begin(), forest.end());

  // Fundamental circuit of a chord (u, v): the chord first, then the forest
  // path from v back to u through their nearest common ancestor.
  auto ancestor_chain = [&](int v) {
    std::vector<int> chain;
    for (int x = v; x >= 0; x = basis.parent[static_cast<std::size_t>(x)]) chain.push_back(x);
    return chain;
  };

  for (const auto& [a, b] : g.edges()) {
    if (forest.count({a, b})) continue;
    basis.chords.push_back(OrientedEdge{a, b});

    std::vector<int> up_a = ancestor_chain(a);
    std::vector<int> up_b = ancestor_chain(b);
    std::vector<bool> on_a(static_cast<std::size_t>(n), false);
    for (int x : up_a) on_a[static_cast<std::size_t>(x)] = true;
    int lca = -1;
    std::vector<int> b_to_lca;
    for (int x : up_b) {
      b_to_lca.push_back(x);
      if (on_a[static_cast<std::size_t>(x)]) {
        lca = x;
        break;
      }
    }

    std::vector<int> circuit;
    circuit.push_back(a);
    for (int x : b_to_lca) circuit.push_back(x);  // b, ..., lca
    bool collecting = false;
    std::vector<int> lca_to_a;
    for (auto it = up_a.rbegin(); it != up_a.rend(); ++it) {  // root, ..., a
      if (*it == lca) {
        collecting = true;
        continue;  // lca already emitted
      }
      if (collecting) lca_to_a.push_back(*it);
    }
    for (int x : lca_to_a) circuit.push_back(x);
    circuit.push_back(a);
    // Adjacent duplicates appear when lca == a; collapse them.
    std::vector<int> cleaned;
    for (int x : circuit)
      if (cleaned.empty() || cleaned.back() != x) cleaned.push_back(x);
    if (cleaned.front() != cleaned.back()) cleaned.push_back(cleaned.front());
    basis.circuits.push_back(std::move(cleaned));
  }
  return basis;
}

Complex evaluate_character(const SimpleGraph& g, const CircuitBasis& basis,
                           const Character& chi, const std::vector<int>& closed_path) {
  if (closed_path.size() < 2 || closed_path.front() != closed_path.back())
    throw std::invalid_argument("evaluate_character: path is not closed");
  if (chi.values.size() != basis.chords.size())
    throw std::invalid_argument("evaluate_character: one chi value per chord required");
  for (const Complex& x : chi.values)
    if (std::abs(x) == 0.0)
      throw std::invalid_argument("evaluate_character: chi values must be nonzero");

  std::vector<int> multiplicity(basis.chords.size(), 0);
  for (std::size_t i = 0; i + 1 < closed_path.size(); ++i) {
    const int a = closed_path[i];
    const int b = closed_path[i + 1];
    if (!g.has_edge(a, b))
      throw std::invalid_argument("evaluate_character: path walks along a non-edge");
    for (std::size_t c = 0; c < basis.chords.size(); ++c) {
      const OrientedEdge& e = basis.chords[c];
      if (e.from == a && e.to == b) ++multiplicity[c];
      else if (e.from == b && e.to == a) --multiplicity[c];
    }
  }

  Complex value{1.0, 0.0};
  for (std::size_t c = 0; c < basis.chords.size(); ++c) {
    for (int k = 0; k < multiplicity[c]; ++k) value *= chi.values[c];
    for (int k = 0; k > multiplicity[c]; --k) value /= chi.values[c];
  }
  return value;
}

}  // namespace coxir
