#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxir/types.hpp"

namespace coxir {

// Finite simple graph: labeled vertices, unordered edges, no loops and no
// repeated edges (the constructor throws std::invalid_argument otherwise).
// Edges are normalized to index pairs (a, b) with a < b and kept sorted, so
// everything built on top of a graph is deterministic.
class SimpleGraph {
 public:
  SimpleGraph(std::vector<std::string> vertices,
              std::vector<std::pair<std::string, std::string>> edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertices() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> index_of(const std::string& label) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  bool has_edge(int a, int b) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;      // (a, b), a < b, sorted
  std::vector<std::vector<int>> adjacency_;     // sorted by index
};

struct OrientedEdge {
  int from = 0;
  int to = 0;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

struct ComponentMap {
  std::vector<int> of_vertex;  // vertex -> component id (0-based, by least vertex)
  int count = 0;
};

// Spanning forest of a graph together with the data generating its first
// homology: the non-tree edges ("chords", oriented lower index -> higher
// index) and, per chord, the unique fundamental circuit through the forest,
// stored as a closed vertex path that traverses the chord first.
struct CircuitBasis {
  std::vector<std::pair<int, int>> forest_edges;  // canonical (a < b), sorted
  std::vector<OrientedEdge> chords;
  std::vector<std::vector<int>> circuits;         // front() == back()
  std::vector<int> component_map;
  int component_count = 0;
  std::vector<int> parent;                        // forest parent, -1 at roots

  int rank() const { return static_cast<int>(chords.size()); }  // rank of H_1
};

// One-dimensional representation of H_1: a nonzero value per chord, extended
// multiplicatively.
struct Character {
  std::vector<Complex> values;
};

ComponentMap components(const SimpleGraph& g);

// Deterministic basis: breadth-first from the least-index vertex of each
// component, neighbors visited in index order.
CircuitBasis spanning_forest(const SimpleGraph& g);

// Value of chi on a closed path: the path's 1-chain is decomposed in the
// chord basis (forest edges carry the value 1) and the result is the product
// of chord values to their signed multiplicities. Throws if the path is not
// closed or walks along a non-edge.
Complex evaluate_character(const SimpleGraph& g, const CircuitBasis& basis,
                           const Character& chi, const std::vector<int>& closed_path);

}  // namespace coxir
