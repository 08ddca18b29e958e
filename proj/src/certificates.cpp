#include "singraph/certificates.hpp"

#include <algorithm>
#include <string>

#include "singraph/errors.hpp"

namespace sg {

IntVector BalanceCertificate::signed_vector(std::size_t n) const {
  IntVector v(n);
  for (Vertex a : x) v.at(a) = f.at(a);
  for (Vertex b : y) v.at(b) = -f.at(b);
  return v;
}

nlohmann::json to_json(const BalanceCertificate& c) {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [v, w] : c.f) f[std::to_string(v)] = integer_to_json(w);
  return {{"X", c.x}, {"Y", c.y}, {"f", f}};
}

BalanceCertificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("X") || !j.contains("Y") || !j.contains("f"))
    throw InputError("certificate needs \"X\", \"Y\" and \"f\"");
  BalanceCertificate c;
  try {
    c.x = j["X"].get<std::vector<Vertex>>();
    c.y = j["Y"].get<std::vector<Vertex>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("certificate: X and Y must be vertex lists: ") + e.what());
  }
  if (!j["f"].is_object()) throw InputError("certificate: f must be an object");
  for (const auto& [key, val] : j["f"].items()) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != key.size()) throw InputError("certificate: f key \"" + key + "\" is not a vertex");
    c.f[v] = integer_from_json(val);
  }
  std::sort(c.x.begin(), c.x.end());
  std::sort(c.y.begin(), c.y.end());
  return c;
}

std::optional<BalanceCertificate> extract_balance_certificate(const Graph& g) {
  const KernelBasis kb = kernel_basis(g.adjacency_matrix());
  if (kb.vectors.empty()) return std::nullopt;
  const IntVector& h = kb.vectors.front();
  BalanceCertificate c;
  for (Vertex v = 0; v < h.size(); ++v) {
    if (h[v] > 0) c.x.push_back(v);
    if (h[v] < 0) c.y.push_back(v);
    if (h[v] != 0) c.f[v] = abs(h[v]);
  }
  if (c.x.empty() || c.y.empty())
    throw OneSignedKernel("balance certificate: kernel vector has entries of one sign only; "
                             "X or Y would be empty");
  return c;
}

namespace {

void check_well_formed(const Graph& g, const BalanceCertificate& c) {
  if (c.x.empty() || c.y.empty()) throw InputError("certificate: X and Y must be nonempty");
  std::vector<Vertex> all = c.x;
  all.insert(all.end(), c.y.begin(), c.y.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InputError("certificate: X and Y are not disjoint (or repeat a vertex)");
  if (all.back() >= g.order()) throw InputError("certificate: vertex " + std::to_string(all.back()) + " out of range");
  for (Vertex v : all) {
    auto it = c.f.find(v);
    if (it == c.f.end()) throw InputError("certificate: no weight for vertex " + std::to_string(v));
    if (it->second <= 0) throw InputError("certificate: weight of vertex " + std::to_string(v) + " is not positive");
  }
  for (const auto& [v, w] : c.f)
    if (!std::binary_search(all.begin(), all.end(), v))
      throw InputError("certificate: weight given for vertex " + std::to_string(v) + " outside X and Y");
}

}  // namespace

bool verify_balance_certificate(const Graph& g, const BalanceCertificate& c) {
  check_well_formed(g, c);
  const IntVector h = c.signed_vector(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Integer s = 0;
    for (Vertex u : g.neighbors(v)) s += h[u];
    if (s != 0) return false;
  }
  return true;
}

std::optional<std::pair<Vertex, Vertex>> duplicate_neighborhood_certificate(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w)
      if (!g.adjacent(u, w) && g.neighbors(u) == g.neighbors(w)) return std::pair{u, w};
  return std::nullopt;
}

std::size_t certificate_nullity_bound(const Graph& g, const BalanceCertificate& c) {
  if (!verify_balance_certificate(g, c))
    throw CertificateRejected("certificate does not satisfy the balance condition");
  return std::min(c.x.size(), c.y.size());
}

}  // namespace sg
