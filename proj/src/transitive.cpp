#include "singraph/transitive.hpp"

#include <algorithm>

#include "singraph/errors.hpp"
#include "singraph/linalg.hpp"

namespace sg {

GroupAction::GroupAction(FiniteGroup g, std::vector<VertexPermutation> perms)
    : group_(std::move(g)), perms_(std::move(perms)) {
  if (perms_.size() != group_.order())
    throw InputError("action: " + std::to_string(perms_.size()) + " permutations for a group of order " +
                     std::to_string(group_.order()));
  const std::size_t n = perms_[0].size();
  for (std::size_t e = 0; e < perms_.size(); ++e)
    if (perms_[e].size() != n) throw InputError("action: permutation " + std::to_string(e) + " has the wrong length");
  if (!(perms_[0] == VertexPermutation::identity(n))) throw InputError("action: the identity does not act trivially");
  for (Element a = 0; a < group_.order(); ++a)
    for (Element b = 0; b < group_.order(); ++b)
      if (!(perms_[group_.op(a, b)] == perms_[a].then(perms_[b])))
        throw InputError("action: not closed under the group law at " + std::to_string(a) + "*" + std::to_string(b));
}

GroupAction GroupAction::right_regular(const FiniteGroup& g) {
  std::vector<VertexPermutation> perms;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Vertex> img(g.order());
    for (Element v = 0; v < g.order(); ++v) img[v] = g.op(v, x);
    perms.emplace_back(std::move(img));
  }
  return GroupAction(g, std::move(perms));
}

std::vector<std::vector<Vertex>> GroupAction::orbits() const {
  const std::size_t n = degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> orb;
    for (const auto& p : perms_)
      if (!seen[p(v)]) {
        seen[p(v)] = true;
        orb.push_back(p(v));
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool GroupAction::is_transitive() const { return orbits().size() == 1; }

std::size_t GroupAction::stabilizer_order(Vertex v) const {
  std::size_t s = 0;
  for (const auto& p : perms_)
    if (p(v) == v) ++s;
  return s;
}

void GroupAction::check_automorphisms(const Graph& graph) const {
  if (degree() != graph.order())
    throw InputError("action acts on " + std::to_string(degree()) + " points, graph has " +
                     std::to_string(graph.order()) + " vertices");
  for (std::size_t e = 0; e < perms_.size(); ++e)
    if (!is_automorphism(graph, perms_[e]))
      throw InputError("action: permutation " + std::to_string(e) + " is not an automorphism of the graph");
}

GroupAction action_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("perms"))
    throw InputError("action document needs \"group\" and \"perms\"");
  FiniteGroup g = group_from_json(j["group"]);
  std::vector<VertexPermutation> perms;
  try {
    for (const auto& p : j["perms"]) perms.emplace_back(p.get<std::vector<Vertex>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed permutation list: ") + e.what());
  }
  return GroupAction(std::move(g), std::move(perms));
}

// ---------------------------------------------------------------------------

ClassFunction tau(const GroupAction& action, const Graph& graph) {
  action.check_automorphisms(graph);
  ClassFunction out;
  for (const auto& p : action.perms()) {
    long count = 0;
    for (Vertex v = 0; v < graph.order(); ++v)
      if (graph.adjacent(v, p(v))) ++count;
    out.emplace_back(1, Rational(count));
  }
  if (!out.empty() && !out[0].is_zero()) throw InconsistencyError("tau(1) != 0");
  return out;
}

ClassFunction tau_power(const GroupAction& action, const Graph& graph, std::size_t l) {
  if (l == 0) throw InputError("tau_power: l must be at least 1");
  action.check_automorphisms(graph);
  const IntMatrix a = graph.adjacency_matrix();
  IntMatrix al = a;
  for (std::size_t i = 1; i < l; ++i) al = al * a;
  ClassFunction out;
  for (const auto& p : action.perms()) {
    Integer s = 0;
    for (Vertex v = 0; v < graph.order(); ++v) s += al(v, p(v));
    out.emplace_back(1, Rational(s));
  }
  return out;
}

ClassFunction permutation_character(const GroupAction& action) {
  ClassFunction out;
  for (const auto& p : action.perms()) {
    long fixed = 0;
    for (Vertex v = 0; v < p.size(); ++v)
      if (p(v) == v) ++fixed;
    out.emplace_back(1, Rational(fixed));
  }
  return out;
}

CycloNum inner_product(const ClassFunction& f, const Character& chi) { return class_inner_product(f, chi.values); }

bool is_class_function(const FiniteGroup& g, const ClassFunction& f) {
  if (f.size() != g.order()) return false;
  for (const auto& cls : g.conjugacy_classes())
    for (Element e : cls)
      if (!(f[e] == f[cls[0]])) return false;
  return true;
}

namespace {

// <psi, chi_i> as non-negative integers.
std::vector<std::size_t> decompose_permutation_character(const GroupAction& action, const CharacterTable& t) {
  const ClassFunction psi = permutation_character(action);
  std::vector<std::size_t> mult;
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    const CycloNum ip = inner_product(psi, t.characters[i]);
    if (!ip.is_rational())
      throw InputError("<psi, chi_" + std::to_string(i) + "> = " + ip.to_string() + " is not rational");
    const Rational q = ip.rational_value();
    if (q.get_den() != 1 || q < 0)
      throw InputError("<psi, chi_" + std::to_string(i) + "> = " + q.get_str() +
                       " is not a non-negative integer; inputs are inconsistent");
    mult.push_back(q.get_num().get_ui());
  }
  return mult;
}

}  // namespace

bool is_multiplicity_free(const GroupAction& action, const CharacterTable& t) {
  if (!t.complete(action.group())) throw InputError("is_multiplicity_free: character table is incomplete");
  for (std::size_t m : decompose_permutation_character(action, t))
    if (m > 1) return false;
  return true;
}

TauSpectrum spectrum_via_tau(const GroupAction& action, const Graph& graph, const CharacterTable& t) {
  if (!t.complete(action.group())) throw InputError("spectrum_via_tau: character table is incomplete");
  const auto mult = decompose_permutation_character(action, t);
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 1)
      throw InputError("action is not multiplicity free (character " + std::to_string(i) + " occurs " +
                       std::to_string(mult[i]) + " times); use the moment data instead");
  const ClassFunction tv = tau(action, graph);
  TauSpectrum out;
  std::size_t nonzero_degree = 0;
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    if (mult[i] == 0) continue;
    const CycloNum lambda = inner_product(tv, t.characters[i]);
    out.spectrum.add(lambda, t.characters[i].degree, i);
    if (!lambda.is_zero()) nonzero_degree += t.characters[i].degree;
  }
  if (out.spectrum.total_multiplicity() != graph.order())
    throw InconsistencyError("spectrum_via_tau: multiplicities sum to " +
                             std::to_string(out.spectrum.total_multiplicity()) + ", expected " +
                             std::to_string(graph.order()));
  out.nullity = graph.order() - nonzero_degree;
  out.rank_nullity = nullity(graph.adjacency_matrix());
  if (out.nullity != out.rank_nullity)
    throw InconsistencyError("spectrum_via_tau: tau nullity " + std::to_string(out.nullity) + " != rank nullity " +
                             std::to_string(out.rank_nullity));
  return out;
}

std::vector<CycloNum> character_moments(const GroupAction& action, const Graph& graph, const CharacterTable& t,
                                        std::size_t chi_index, std::size_t r) {
  if (r == 0) throw InputError("character_moments: r must be at least 1");
  if (chi_index >= t.characters.size())
    throw InputError("character_moments: no character " + std::to_string(chi_index));
  std::vector<CycloNum> out;
  for (std::size_t l = 1; l <= r; ++l)
    out.push_back(inner_product(tau_power(action, graph, l), t.characters[chi_index]));
  return out;
}

}  // namespace sg
