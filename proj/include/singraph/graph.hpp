#ifndef SINGRAPH_GRAPH_HPP
#define SINGRAPH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace sg {

class IntMatrix;

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

// Simple undirected graph on vertices 0..n-1.
//
// The edge list is kept sorted lexicographically, which fixes the vertex
// order of line graphs and the byte layout of every serialization.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on loops, duplicates or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  IntMatrix adjacency_matrix() const;

  // Connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;

  nlohmann::json to_json() const;
  std::string to_edge_list() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
};

// A bijection on 0..n-1; v maps to image[v].
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<Vertex> image);
  static VertexPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  const std::vector<Vertex>& image() const noexcept { return image_; }

  VertexPermutation inverse() const;
  // Apply *this first, then `after`.
  VertexPermutation then(const VertexPermutation& after) const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> image_;
};

// "n m" header followed by m lines "u v". Errors carry the 1-based line.
Graph parse_graph(std::string_view text);

Graph complement(const Graph& g);

struct LineGraph {
  Graph graph;
  std::vector<Edge> labels;  // labels[i] is the edge of the source graph behind vertex i
};
LineGraph line_graph(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] is the source vertex behind vertex i
};
// `vertices` may be given in any order; the result is re-indexed in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices);

std::optional<std::size_t> regularity(const Graph& g);

// Checks the permutation both edge-wise and as P*A == A*P; throws
// InconsistencyError if the two disagree.
bool is_automorphism(const Graph& g, const VertexPermutation& p);

// Standard families used by the CLI and the test suites.
namespace families {
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
}  // namespace families

}  // namespace sg

#endif  // SINGRAPH_GRAPH_HPP
