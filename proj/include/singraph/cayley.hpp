#ifndef SINGRAPH_CAYLEY_HPP
#define SINGRAPH_CAYLEY_HPP

// Spectra and singularity of Cayley graphs.
//
// Conventions: Cay(G, H) has vertex set G and v ~ w iff w v^-1 is in H,
// i.e. the neighbours of v are {hv : h in H}. Right multiplication
// v -> vg is then an automorphism for every g.
//
// Only the character criterion is offered for non-abelian groups; it
// requires H to be a normal subset. Eigenvalues of non-normal Cayley graphs
// over non-abelian groups would need representation matrices, which are
// not modelled here.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singraph/cyclotomic.hpp"
#include "singraph/graph.hpp"
#include "singraph/group.hpp"
#include "singraph/poly.hpp"

namespace sg {

// Throws InputError if 1 is in H or H != H^-1. A non-generating H is
// accepted; the resulting graph is disconnected.
Graph cayley_graph(const FiniteGroup& g, const GroupSubset& h);

struct RegularActionLabeling {
  Vertex base = 0;
  GroupSubset connecting_set;
  std::vector<Element> label;  // label[v] = g with base^g = v
};

// Sabidussi recognition. `perms[g]` is the permutation of group element g,
// composed as a right action: perms[op(a, b)] = perms[a] then perms[b].
// Checks that the perms are automorphisms forming a regular action, then
// labels vertices by group elements and verifies that the labeling is an
// isomorphism onto Cay(G, H). Throws InputError naming the failed property.
RegularActionLabeling cayley_from_regular_action(const Graph& graph, const std::vector<VertexPermutation>& perms,
                                                 const FiniteGroup& g);

// Circulant Cay(C_n, {a^m : m in hstar}).
class CirculantSpec {
 public:
  // Throws InputError (naming the missing exponent) unless hstar is a
  // nonempty subset of 1..n-1 closed under m -> n - m.
  CirculantSpec(std::size_t n, std::vector<std::size_t> hstar);

  std::size_t n() const noexcept { return n_; }
  const std::vector<std::size_t>& hstar() const noexcept { return hstar_; }
  bool connected() const;  // gcd(n, hstar) == 1
  GroupSubset connecting_set() const { return GroupSubset(hstar_); }
  Graph graph() const;

  nlohmann::json to_json() const;

 private:
  std::size_t n_;
  std::vector<std::size_t> hstar_;
};

// Every valid exponent set of order n, in increasing bitmask order over the
// orbits {m, n - m}. With connected_only, only those generating Z_n.
std::vector<CirculantSpec> enumerate_circulants(std::size_t n, bool connected_only);

IntPoly circulant_psi(const CirculantSpec& spec);

struct CirculantNullity {
  std::size_t nullity = 0;
  std::vector<std::size_t> divisors;  // d | n, d > 1, Phi_d | Psi
};
CirculantNullity circulant_nullity(const CirculantSpec& spec);

struct SpectrumEntry {
  CycloNum eigenvalue;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> sources;  // character indices that produced it
};

// Merged by canonical value, sorted by eigenvalue's canonical order.
struct CharacterSpectrum {
  std::vector<SpectrumEntry> entries;

  std::size_t total_multiplicity() const;
  std::size_t multiplicity_of_zero() const;
  void add(const CycloNum& eigenvalue, std::size_t multiplicity, std::size_t source);
  // Same multiset of eigenvalues (sources ignored).
  bool same_multiset(const CharacterSpectrum& other) const;
  nlohmann::json to_json() const;
};

// Psi(zeta_n^(i-1)) for i = 1..n; source index is i - 1.
CharacterSpectrum circulant_spectrum(const CirculantSpec& spec);

// Requires H normal and the table complete; throws InputError otherwise.
// Entry for chi: (sum_{h in H} chi(h)) / chi(1) with multiplicity chi(1)^2.
CharacterSpectrum character_sum_spectrum(const FiniteGroup& g, const GroupSubset& h, const CharacterTable& t);

CycloNum character_sum(const GroupSubset& h, const Character& chi);
bool is_vanishing(const GroupSubset& h, const Character& chi);

struct CosetVanishingCertificate {
  GroupSubset stabilizer;  // K, with KH = H
  std::size_t character = 0;
  Element witness = 0;  // k in K with chi(k) != 1
};
// Degree-1 character that is non-trivial on the left stabilizer of H; any
// such character vanishes on H. Returns nullopt when the stabilizer is
// trivial or every degree-1 character is trivial on it.
std::optional<CosetVanishingCertificate> coset_vanishing_certificate(const FiniteGroup& g, const GroupSubset& h,
                                                                      const CharacterTable& t);

struct LiftedVanishing {
  std::size_t intersection = 0;       // common nonzero |gK cap H|
  std::size_t quotient_character = 0;  // index into the quotient table
  std::vector<CycloNum> lifted_values;
};
// `quotient_table` must be a character table of quotient_group(g, k).group.
// Throws InputError if K is not a normal subgroup.
std::optional<LiftedVanishing> lift_vanishing(const FiniteGroup& g, const GroupSubset& k, const GroupSubset& h,
                                              const CharacterTable& quotient_table);

// Every coset of the normal subgroup K meets H in the same number c > 0 of
// elements and G/K is abelian: then nullity >= |G/K| - 1. Returns that bound.
std::optional<std::size_t> uniform_coset_bound(const FiniteGroup& g, const GroupSubset& k, const GroupSubset& h);

struct TensorDecomposition {
  Graph quotient;                      // graph on the right cosets of K
  GroupSubset stabilizer;              // K
  std::vector<GroupSubset> cosets;     // right cosets Kg, sorted by least element
  std::vector<Element> vertex_order;   // coset-major ordering of G
};
// A(Cay(G,H)) reordered by right cosets of K = left_stabilizer(G,H) equals
// A(quotient) (x) J_|K|; verified entrywise (InconsistencyError if not).
std::optional<TensorDecomposition> tensor_decompose(const FiniteGroup& g, const GroupSubset& h);

// (|G|/|K|)(|K| - 1) for K = left_stabilizer(G,H) when |K| > 1. The exact
// nullity is checked against it (InconsistencyError if smaller).
std::optional<std::size_t> coset_nullity_bound(const FiniteGroup& g, const GroupSubset& h);

struct RootCosetWitness {
  std::size_t character = 0;  // i - 1
  std::size_t subgroup_order = 0;  // |Upsilon| > 1
};
// Looks for i and a non-trivial subgroup Upsilon of the n-th roots of unity
// such that the multiset {zeta^((i-1)m) : m in hstar} is a union of
// Upsilon-cosets. Such a witness implies singularity (not conversely).
std::optional<RootCosetWitness> root_coset_witness(const CirculantSpec& spec);

}  // namespace sg

#endif  // SINGRAPH_CAYLEY_HPP
