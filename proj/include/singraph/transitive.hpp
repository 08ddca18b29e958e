#ifndef SINGRAPH_TRANSITIVE_HPP
#define SINGRAPH_TRANSITIVE_HPP

// Spectra of vertex-transitive graphs from a group of automorphisms.
//
// tau(g) counts vertices adjacent to their own image under g. Expanding the
// class function tau in irreducible characters gives <tau, chi> = sum_j
// m_ji lambda_j, where m_ji is the multiplicity of the chi-module in the
// lambda_j eigenspace. When the permutation character is multiplicity free
// every m_ji is 0 or 1 and the eigenvalues can be read off directly;
// otherwise only the moments <tau^l, chi> are reported.

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "singraph/cayley.hpp"
#include "singraph/graph.hpp"
#include "singraph/group.hpp"

namespace sg {

using ClassFunction = std::vector<CycloNum>;

// Right action: perms[op(a, b)] = perms[a] then perms[b]; perms[0] = id.
class GroupAction {
 public:
  // Throws InputError unless perms form an action of g by permutations of
  // equal length.
  GroupAction(FiniteGroup g, std::vector<VertexPermutation> perms);

  // Right multiplication v -> v*x on the group's own elements.
  static GroupAction right_regular(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<VertexPermutation>& perms() const noexcept { return perms_; }
  std::size_t degree() const noexcept { return perms_.empty() ? 0 : perms_[0].size(); }
  bool is_transitive() const;
  std::vector<std::vector<Vertex>> orbits() const;
  std::size_t stabilizer_order(Vertex v) const;

  // Throws InputError unless every permutation is an automorphism of g.
  void check_automorphisms(const Graph& graph) const;

 private:
  FiniteGroup group_;
  std::vector<VertexPermutation> perms_;
};

// {"group": {...}, "perms": [[...], ...]}
GroupAction action_from_json(const nlohmann::json& j);

ClassFunction tau(const GroupAction& action, const Graph& graph);
// tau^l(g) = trace(A^l P_g) = sum_v #(l-walks from v to v^g)
ClassFunction tau_power(const GroupAction& action, const Graph& graph, std::size_t l);
ClassFunction permutation_character(const GroupAction& action);

CycloNum inner_product(const ClassFunction& f, const Character& chi);

bool is_class_function(const FiniteGroup& g, const ClassFunction& f);

// Throws InputError when some <psi, chi> is not a non-negative integer.
bool is_multiplicity_free(const GroupAction& action, const CharacterTable& t);

struct TauSpectrum {
  CharacterSpectrum spectrum;
  std::size_t nullity = 0;       // |V| - sum chi(1) over chi in psi with <tau, chi> != 0
  std::size_t rank_nullity = 0;  // exact rank route
  bool singular() const { return nullity > 0; }
};
// Throws InputError if the action is not multiplicity free, and
// InconsistencyError if the two nullity routes disagree.
TauSpectrum spectrum_via_tau(const GroupAction& action, const Graph& graph, const CharacterTable& t);

// <tau^l, chi_index> for l = 1..r
std::vector<CycloNum> character_moments(const GroupAction& action, const Graph& graph, const CharacterTable& t,
                                        std::size_t chi_index, std::size_t r);

}  // namespace sg

#endif  // SINGRAPH_TRANSITIVE_HPP
