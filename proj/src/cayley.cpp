#include "singraph/cayley.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "singraph/errors.hpp"
#include "singraph/linalg.hpp"

namespace sg {

Graph cayley_graph(const FiniteGroup& g, const GroupSubset& h) {
  const auto report = is_connecting_set(g, h);
  if (!report.excludes_identity) throw InputError("connecting set contains the identity (would create loops)");
  if (!report.symmetric) throw InputError("connecting set is not closed under inverses: " + report.describe());
  std::vector<Edge> edges;
  for (Element v = 0; v < g.order(); ++v)
    for (Element x : h) {
      const Element w = g.op(x, v);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(g.order(), std::move(edges));
}

RegularActionLabeling cayley_from_regular_action(const Graph& graph, const std::vector<VertexPermutation>& perms,
                                                 const FiniteGroup& g) {
  const std::size_t n = graph.order();
  if (perms.size() != g.order())
    throw InputError("action: " + std::to_string(perms.size()) + " permutations for a group of order " +
                     std::to_string(g.order()));
  for (std::size_t e = 0; e < perms.size(); ++e) {
    if (perms[e].size() != n)
      throw InputError("action: permutation " + std::to_string(e) + " has length " + std::to_string(perms[e].size()));
    if (!is_automorphism(graph, perms[e]))
      throw InputError("action: permutation " + std::to_string(e) + " is not an automorphism");
  }
  if (!(perms[0] == VertexPermutation::identity(n))) throw InputError("action: the identity does not act trivially");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (!(perms[g.op(a, b)] == perms[a].then(perms[b])))
        throw InputError("action: not a group action (fails at " + std::to_string(a) + "*" + std::to_string(b) + ")");
  std::vector<Element> label(n, g.order());
  for (Element e = 0; e < g.order(); ++e) {
    const Vertex v = perms[e](0);
    if (label[v] != g.order())
      throw InputError("action is not regular: vertex 0 has a non-trivial stabilizer (elements " +
                       std::to_string(label[v]) + " and " + std::to_string(e) + " agree on it)");
    label[v] = e;
  }
  for (Vertex v = 0; v < n; ++v)
    if (label[v] == g.order())
      throw InputError("action is not regular: not transitive (vertex " + std::to_string(v) +
                       " is not in the orbit of 0)");

  RegularActionLabeling out;
  out.base = 0;
  std::vector<Element> hs;
  for (Vertex w : graph.neighbors(0)) hs.push_back(label[w]);
  out.connecting_set = GroupSubset(std::move(hs));
  out.label = std::move(label);

  const Graph cay = cayley_graph(g, out.connecting_set);
  std::vector<Edge> relabeled;
  for (const auto& [u, v] : graph.edges()) relabeled.emplace_back(out.label[u], out.label[v]);
  if (!(Graph(n, std::move(relabeled)) == cay))
    throw InconsistencyError("regular action labeling is not an isomorphism onto Cay(G, H)");
  return out;
}

// ---------------------------------------------------------------------------

CirculantSpec::CirculantSpec(std::size_t n, std::vector<std::size_t> hstar) : n_(n), hstar_(std::move(hstar)) {
  if (n < 2) throw InputError("circulant needs n >= 2");
  std::sort(hstar_.begin(), hstar_.end());
  hstar_.erase(std::unique(hstar_.begin(), hstar_.end()), hstar_.end());
  if (hstar_.empty()) throw InputError("H* is empty");
  for (std::size_t m : hstar_)
    if (m == 0 || m >= n) throw InputError("exponent " + std::to_string(m) + " outside 1.." + std::to_string(n - 1));
  for (std::size_t m : hstar_)
    if (!std::binary_search(hstar_.begin(), hstar_.end(), n - m))
      throw InputError("H* is not symmetric: contains " + std::to_string(m) + " but not " + std::to_string(n - m));
}

bool CirculantSpec::connected() const {
  std::size_t gg = n_;
  for (std::size_t m : hstar_) gg = std::gcd(gg, m);
  return gg == 1;
}

Graph CirculantSpec::graph() const { return cayley_graph(FiniteGroup::cyclic(n_), connecting_set()); }

nlohmann::json CirculantSpec::to_json() const { return {{"n", n_}, {"hstar", hstar_}}; }

std::vector<CirculantSpec> enumerate_circulants(std::size_t n, bool connected_only) {
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t m = 1; 2 * m <= n; ++m) {
    if (2 * m == n)
      orbits.push_back({m});
    else
      orbits.push_back({m, n - m});
  }
  std::vector<CirculantSpec> out;
  const std::size_t k = orbits.size();
  if (k >= 63) throw InputError("enumerate_circulants: n too large");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> hs;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) hs.insert(hs.end(), orbits[i].begin(), orbits[i].end());
    CirculantSpec spec(n, std::move(hs));
    if (connected_only && !spec.connected()) continue;
    out.push_back(std::move(spec));
  }
  return out;
}

IntPoly circulant_psi(const CirculantSpec& spec) {
  std::vector<Integer> c(spec.n());
  for (std::size_t m : spec.hstar()) c[m] = 1;
  return IntPoly(std::move(c));
}

CirculantNullity circulant_nullity(const CirculantSpec& spec) {
  const IntPoly psi = circulant_psi(spec);
  CirculantNullity out;
  for (std::size_t d : divisors(spec.n())) {
    if (d == 1) continue;
    if (poly_divides(cyclotomic_poly(d), psi)) {
      out.divisors.push_back(d);
      out.nullity += euler_phi(d);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t CharacterSpectrum::total_multiplicity() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

std::size_t CharacterSpectrum::multiplicity_of_zero() const {
  for (const auto& e : entries)
    if (e.eigenvalue.is_zero()) return e.multiplicity;
  return 0;
}

void CharacterSpectrum::add(const CycloNum& eigenvalue, std::size_t multiplicity, std::size_t source) {
  for (auto& e : entries)
    if (e.eigenvalue == eigenvalue) {
      e.multiplicity += multiplicity;
      e.sources.push_back(source);
      return;
    }
  auto pos = std::upper_bound(entries.begin(), entries.end(), eigenvalue,
                              [](const CycloNum& z, const SpectrumEntry& e) { return z < e.eigenvalue; });
  entries.insert(pos, SpectrumEntry{eigenvalue, multiplicity, {source}});
}

bool CharacterSpectrum::same_multiset(const CharacterSpectrum& other) const {
  if (entries.size() != other.entries.size()) return false;
  for (const auto& e : entries) {
    bool found = false;
    for (const auto& f : other.entries)
      if (f.eigenvalue == e.eigenvalue) {
        if (f.multiplicity != e.multiplicity) return false;
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

nlohmann::json CharacterSpectrum::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries)
    out.push_back({{"eigenvalue", sg::to_json(e.eigenvalue)},
                   {"text", e.eigenvalue.to_string()},
                   {"multiplicity", e.multiplicity},
                   {"sources", e.sources}});
  return out;
}

CharacterSpectrum circulant_spectrum(const CirculantSpec& spec) {
  const IntPoly psi = circulant_psi(spec);
  CharacterSpectrum s;
  for (std::size_t i = 0; i < spec.n(); ++i)
    s.add(eval_poly_cyclotomic(psi, CycloNum::root_of_unity(spec.n(), static_cast<long long>(i))), 1, i);
  return s;
}

CycloNum character_sum(const GroupSubset& h, const Character& chi) {
  CycloNum s = chi.values.empty() ? CycloNum(1) : CycloNum(chi.values[0].conductor());
  for (Element x : h) s += chi.values.at(x);
  return s;
}

bool is_vanishing(const GroupSubset& h, const Character& chi) { return character_sum(h, chi).is_zero(); }

CharacterSpectrum character_sum_spectrum(const FiniteGroup& g, const GroupSubset& h, const CharacterTable& t) {
  check_subset(g, h);
  if (!is_normal_subset(g, h)) throw InputError("character_sum_spectrum: H is not a normal subset");
  if (!t.complete(g)) throw InputError("character_sum_spectrum: character table is incomplete");
  CharacterSpectrum s;
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    const auto& chi = t.characters[i];
    if (chi.values.size() != g.order()) throw InputError("character table does not match the group order");
    const CycloNum lambda = character_sum(h, chi) / Rational(static_cast<long>(chi.degree));
    s.add(lambda, chi.degree * chi.degree, i);
  }
  return s;
}

std::optional<CosetVanishingCertificate> coset_vanishing_certificate(const FiniteGroup& g, const GroupSubset& h,
                                                                      const CharacterTable& t) {
  const GroupSubset k = left_stabilizer(g, h);
  if (k.size() <= 1) return std::nullopt;
  const CycloNum one(1, Rational(1));
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    const auto& chi = t.characters[i];
    if (chi.degree != 1) continue;
    for (Element x : k) {
      if (chi.values.at(x) == one) continue;
      if (!is_vanishing(h, chi))
        throw InconsistencyError("coset certificate: character " + std::to_string(i) +
                                 " is non-trivial on the stabilizer but does not vanish on H");
      return CosetVanishingCertificate{k, i, x};
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> coset_intersections(const Quotient& q, const GroupSubset& h) {
  std::vector<std::size_t> counts(q.cosets.size(), 0);
  for (Element x : h) ++counts[q.projection[x]];
  return counts;
}

}  // namespace

std::optional<LiftedVanishing> lift_vanishing(const FiniteGroup& g, const GroupSubset& k, const GroupSubset& h,
                                              const CharacterTable& quotient_table) {
  check_subset(g, h);
  const Quotient q = quotient_group(g, k);
  validate_character_table(quotient_table, q.group);
  const auto counts = coset_intersections(q, h);
  std::size_t c = 0;
  for (std::size_t x : counts) {
    if (x == 0) continue;
    if (c != 0 && x != c) return std::nullopt;
    c = x;
  }
  if (c == 0) return std::nullopt;
  for (std::size_t i = 0; i < quotient_table.characters.size(); ++i) {
    const auto& chi = quotient_table.characters[i];
    CycloNum s(quotient_table.conductor);
    for (Element x : h) s += chi.values[q.projection[x]];
    if (!s.is_zero()) continue;
    LiftedVanishing out{c, i, {}};
    Character lifted;
    lifted.degree = chi.degree;
    for (Element x = 0; x < g.order(); ++x) lifted.values.push_back(chi.values[q.projection[x]]);
    if (!is_vanishing(h, lifted)) throw InconsistencyError("lift_vanishing: lifted character does not vanish on H");
    out.lifted_values = std::move(lifted.values);
    return out;
  }
  return std::nullopt;
}

std::optional<std::size_t> uniform_coset_bound(const FiniteGroup& g, const GroupSubset& k, const GroupSubset& h) {
  check_subset(g, h);
  const Quotient q = quotient_group(g, k);
  if (!q.group.is_abelian()) return std::nullopt;
  const auto counts = coset_intersections(q, h);
  if (counts.empty() || counts[0] == 0) return std::nullopt;
  for (std::size_t x : counts)
    if (x != counts[0]) return std::nullopt;
  return q.cosets.size() - 1;
}

std::optional<TensorDecomposition> tensor_decompose(const FiniteGroup& g, const GroupSubset& h) {
  const GroupSubset k = left_stabilizer(g, h);
  if (k.size() <= 1) return std::nullopt;
  const Graph cay = cayley_graph(g, h);
  TensorDecomposition out;
  out.stabilizer = k;
  out.cosets = cosets(g, k, CosetSide::Right);
  for (const auto& c : out.cosets) out.vertex_order.insert(out.vertex_order.end(), c.begin(), c.end());
  std::vector<Edge> qedges;
  for (std::size_t i = 0; i < out.cosets.size(); ++i)
    for (std::size_t j = i + 1; j < out.cosets.size(); ++j)
      if (cay.adjacent(out.cosets[i].members()[0], out.cosets[j].members()[0])) qedges.emplace_back(i, j);
  out.quotient = Graph(out.cosets.size(), std::move(qedges));

  const std::size_t n = g.order();
  IntMatrix reordered(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      reordered(i, j) = cay.adjacent(out.vertex_order[i], out.vertex_order[j]) ? 1 : 0;
  if (!(reordered == kronecker(out.quotient.adjacency_matrix(), IntMatrix::ones(k.size(), k.size()))))
    throw InconsistencyError("tensor_decompose: reordered adjacency matrix is not A(quotient) (x) J");
  return out;
}

std::optional<std::size_t> coset_nullity_bound(const FiniteGroup& g, const GroupSubset& h) {
  const GroupSubset k = left_stabilizer(g, h);
  if (k.size() <= 1) return std::nullopt;
  const std::size_t bound = (g.order() / k.size()) * (k.size() - 1);
  const std::size_t exact = nullity(cayley_graph(g, h).adjacency_matrix());
  if (exact < bound)
    throw InconsistencyError("coset bound " + std::to_string(bound) + " exceeds exact nullity " +
                             std::to_string(exact));
  return bound;
}

std::optional<RootCosetWitness> root_coset_witness(const CirculantSpec& spec) {
  const std::size_t n = spec.n();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> count(n, 0);
    for (std::size_t m : spec.hstar()) ++count[(i * m) % n];
    for (std::size_t s : divisors(n)) {
      if (s == 1) continue;
      const std::size_t step = n / s;
      bool invariant = true;
      for (std::size_t e = 0; e < n && invariant; ++e) invariant = count[e] == count[(e + step) % n];
      if (invariant) return RootCosetWitness{i, s};
    }
  }
  return std::nullopt;
}

}  // namespace sg
