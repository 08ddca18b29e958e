#ifndef SINGRAPH_GROUP_HPP
#define SINGRAPH_GROUP_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "singraph/cyclotomic.hpp"

namespace sg {

using Element = std::size_t;

// Finite group given by its composition table over 0..n-1, identity at 0.
// op(a, b) is the product ab; when reading products as permutations,
// a is applied first.
class FiniteGroup {
 public:
  // Largest order for which associativity is checked (O(n^3)).
  static constexpr std::size_t kAssociativityCheckLimit = 256;

  FiniteGroup() : FiniteGroup(cyclic(1)) {}

  static FiniteGroup cyclic(std::size_t n);
  // Validates every axiom; throws InputError naming the failed one.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table);

  std::size_t order() const noexcept { return n_; }
  Element op(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_.at(a); }
  Element conjugate(Element g, Element by) const { return op(op(inverse(by), g), by); }
  bool associativity_verified() const noexcept { return associativity_verified_; }
  bool is_abelian() const;

  // Classes sorted by least element, members sorted.
  const std::vector<std::vector<Element>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of(Element g) const { return class_index_.at(g); }

  std::vector<std::vector<Element>> table() const;
  nlohmann::json to_json() const;

 private:
  FiniteGroup(std::size_t n, std::vector<Element> table, bool associativity_verified);
  void derive();

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_index_;
  bool associativity_verified_ = false;
};

// {"cyclic": n} or {"table": [[...], ...]}
FiniteGroup group_from_json(const nlohmann::json& j);

// A subset of a group: sorted, duplicate free element indices.
class GroupSubset {
 public:
  GroupSubset() = default;
  GroupSubset(std::initializer_list<Element> members);
  explicit GroupSubset(std::vector<Element> members);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element g) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  std::vector<Element> members_;
};

// Throws InputError if any member is outside the group.
void check_subset(const FiniteGroup& g, const GroupSubset& s);

struct ConnectingSetReport {
  bool generates = false;
  bool symmetric = false;          // H = H^-1
  bool excludes_identity = false;  // 1 not in H
  std::vector<Element> missing_inverses;
  GroupSubset generated;

  bool ok() const { return generates && symmetric && excludes_identity; }
  std::string describe() const;
};
ConnectingSetReport is_connecting_set(const FiniteGroup& g, const GroupSubset& h);

GroupSubset subgroup_generated(const FiniteGroup& g, const GroupSubset& s);
bool is_subgroup(const FiniteGroup& g, const GroupSubset& s);

// {g : gH = H}, the largest subgroup K with KH = H.
GroupSubset left_stabilizer(const FiniteGroup& g, const GroupSubset& h);

enum class CosetSide { Left, Right };  // Left: gK, Right: Kg
// Cosets sorted by least element. Throws InputError if K is not a subgroup.
std::vector<GroupSubset> cosets(const FiniteGroup& g, const GroupSubset& k, CosetSide side);

bool is_normal_subset(const FiniteGroup& g, const GroupSubset& h);

struct Quotient {
  FiniteGroup group;
  std::vector<GroupSubset> cosets;   // element i of the quotient is cosets[i]
  std::vector<Element> projection;   // projection[g] = index of the coset holding g
};
// Throws InputError if K is not a normal subgroup.
Quotient quotient_group(const FiniteGroup& g, const GroupSubset& k);

struct Character {
  std::size_t degree = 1;
  std::vector<CycloNum> values;  // indexed by group element
};

// Irreducible characters with values in Q(zeta_conductor). Character 0 is trivial.
struct CharacterTable {
  std::size_t conductor = 1;
  std::vector<Character> characters;

  // Sum of squared degrees equals |G|.
  bool complete(const FiniteGroup& g) const;
};

CharacterTable cyclic_character_table(std::size_t n);

// Validates against g: lengths, chi(1) = degree, class constancy, trivial
// first character, row orthogonality. Errors name the character index.
// Also accepts {"cyclic": n} as shorthand for cyclic_character_table(n).
CharacterTable parse_character_table(const nlohmann::json& doc, const FiniteGroup& g);
void validate_character_table(const CharacterTable& t, const FiniteGroup& g);

nlohmann::json to_json(const CharacterTable& t);

// (1/|G|) sum_g a(g) conj(b(g))
CycloNum class_inner_product(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b);

}  // namespace sg

#endif  // SINGRAPH_GROUP_HPP
