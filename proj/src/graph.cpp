#include "singraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "singraph/errors.hpp"
#include "singraph/linalg.hpp"

namespace sg {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has a vertex out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw InputError("duplicate edge {" + std::to_string(it->first) + "," +
                     std::to_string(it->second) + "}");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix a(n_, n_);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n_, false);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        comp.push_back(w);
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : edges_) edges.push_back({u, v});
  return {{"n", n_}, {"edges", edges}};
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  os << n_ << ' ' << edges_.size() << '\n';
  for (const auto& [u, v] : edges_) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

VertexPermutation::VertexPermutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || hit[v])
      throw InputError("not a permutation of 0.." + std::to_string(image_.size()) + "-1");
    hit[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<Vertex> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return VertexPermutation(std::move(id));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::then(const VertexPermutation& after) const {
  if (after.size() != size()) throw InputError("permutation length mismatch");
  std::vector<Vertex> r(image_.size());
  for (std::size_t v = 0; v < image_.size(); ++v) r[v] = after.image_[image_[v]];
  return VertexPermutation(std::move(r));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::size_t& a, std::size_t& b) {
  auto skip = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
  };
  std::size_t i = skip(0);
  auto r1 = std::from_chars(line.data() + i, line.data() + line.size(), a);
  if (r1.ec != std::errc() || r1.ptr == line.data() + i) return false;
  i = static_cast<std::size_t>(r1.ptr - line.data());
  const std::size_t j = skip(i);
  if (j == i) return false;
  auto r2 = std::from_chars(line.data() + j, line.data() + line.size(), b);
  if (r2.ec != std::errc() || r2.ptr == line.data() + j) return false;
  return skip(static_cast<std::size_t>(r2.ptr - line.data())) == line.size();
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t n = 0, m = 0;
  if (lines.empty() || !parse_pair(lines[0], n, m))
    throw ParseError(1, "expected header \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<Edge> seen;
  std::size_t ln = 1;
  for (; ln < lines.size() && edges.size() < m; ++ln) {
    std::size_t u = 0, v = 0;
    if (!parse_pair(lines[ln], u, v)) throw ParseError(ln + 1, "expected \"u v\"");
    if (u >= n || v >= n) throw ParseError(ln + 1, "vertex out of range 0.." + std::to_string(n) + "-1");
    if (u == v) throw ParseError(ln + 1, "loop at vertex " + std::to_string(u));
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(seen.begin(), seen.end(), e);
    if (it != seen.end() && *it == e) throw ParseError(ln + 1, "duplicate edge");
    seen.insert(it, e);
    edges.push_back(e);
  }
  if (edges.size() < m)
    throw ParseError(ln + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  for (; ln < lines.size(); ++ln)
    if (!blank(lines[ln])) throw ParseError(ln + 1, "unexpected content after the last edge");
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), std::move(edges));
}

LineGraph line_graph(const Graph& g) {
  if (g.size() == 0) throw InputError("line_graph: graph has no edges");
  const auto& labels = g.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const auto& [a, b] = labels[i];
      const auto& [c, d] = labels[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  return {Graph(labels.size(), std::move(edges)), labels};
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> vertices) {
  if (vertices.empty()) throw InputError("induced_subgraph: empty vertex set");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.back() >= g.order())
    throw InputError("induced_subgraph: vertex " + std::to_string(vertices.back()) + " out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
  return {Graph(vertices.size(), std::move(edges)), std::move(vertices)};
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.order() == 0) return 0;
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

bool is_automorphism(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order())
    throw InputError("permutation has length " + std::to_string(p.size()) + ", graph has " +
                     std::to_string(g.order()) + " vertices");
  bool by_edges = true;
  for (Vertex u = 0; u < g.order() && by_edges; ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) {
        by_edges = false;
        break;
      }
  // P has P(v, p(v)) = 1, so (P A)(u, w) = A(p(u), w) and (A P)(u, w) = A(u, p^-1(w)).
  const IntMatrix a = g.adjacency_matrix();
  IntMatrix pm(g.order(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) pm(v, p(v)) = 1;
  const bool by_matrix = (pm * a) == (a * pm);
  if (by_edges != by_matrix) throw InconsistencyError("is_automorphism: edge and matrix checks disagree");
  return by_edges;
}

namespace families {

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, std::move(e));
}

}  // namespace families

}  // namespace sg
