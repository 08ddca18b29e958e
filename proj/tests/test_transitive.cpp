#include <gtest/gtest.h>

#include "group_fixtures.hpp"
#include "singraph/cayley.hpp"
#include "singraph/errors.hpp"
#include "singraph/transitive.hpp"

using namespace sg;

namespace {

// prod (x - lambda)^mu, coefficients lowest degree first
std::vector<CycloNum> expand(const CharacterSpectrum& s) {
  std::vector<CycloNum> p{CycloNum(1, 1)};
  for (const auto& e : s.entries)
    for (std::size_t k = 0; k < e.multiplicity; ++k) {
      std::vector<CycloNum> q(p.size() + 1, CycloNum(1));
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i + 1] += p[i];
        q[i] -= p[i] * e.eigenvalue;
      }
      p = std::move(q);
    }
  return p;
}

void expect_matches_char_poly(const CharacterSpectrum& s, const Graph& g) {
  const auto p = expand(s);
  const IntPoly cp = char_poly(g.adjacency_matrix());
  ASSERT_EQ(p.size(), cp.coeffs().size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p[i], CycloNum(1, Rational(cp.coeff(i))));
}

GroupAction rotations(std::size_t n) {
  std::vector<VertexPermutation> perms;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Vertex> img(n);
    for (Vertex v = 0; v < n; ++v) img[v] = (v + k) % n;
    perms.emplace_back(img);
  }
  return GroupAction(FiniteGroup::cyclic(n), perms);
}

// S_3 on {0,1,2}; element x of the fixture table is the permutation below.
GroupAction s3_natural() {
  return GroupAction(s3(), {VertexPermutation({0, 1, 2}), VertexPermutation({1, 0, 2}), VertexPermutation({2, 1, 0}),
                            VertexPermutation({0, 2, 1}), VertexPermutation({1, 2, 0}), VertexPermutation({2, 0, 1})});
}

}  // namespace

TEST(Action, Validation) {
  EXPECT_NO_THROW(rotations(5));
  EXPECT_NO_THROW(s3_natural());
  EXPECT_THROW(GroupAction(FiniteGroup::cyclic(3), {VertexPermutation::identity(3)}), InputError);
  EXPECT_THROW(GroupAction(FiniteGroup::cyclic(2), {VertexPermutation({1, 0}), VertexPermutation({0, 1})}),
               InputError);
  // length mismatch
  EXPECT_THROW(GroupAction(FiniteGroup::cyclic(2), {VertexPermutation::identity(2), VertexPermutation({0, 2, 1})}),
               InputError);
  // C_3 with r and r^2 swapped is not a homomorphism
  EXPECT_THROW(GroupAction(FiniteGroup::cyclic(3),
                           {VertexPermutation::identity(3), VertexPermutation({1, 2, 0}),
                            VertexPermutation({1, 2, 0})}),
               InputError);
}

TEST(Action, OrbitsAndStabilizers) {
  const GroupAction r = rotations(6);
  EXPECT_TRUE(r.is_transitive());
  EXPECT_EQ(r.stabilizer_order(3), 1u);
  const GroupAction nat = s3_natural();
  EXPECT_TRUE(nat.is_transitive());
  EXPECT_EQ(nat.stabilizer_order(0), 2u);
  const GroupAction flip(FiniteGroup::cyclic(2), {VertexPermutation::identity(4), VertexPermutation({1, 0, 2, 3})});
  EXPECT_EQ(flip.orbits(), (std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3}}));
  EXPECT_FALSE(flip.is_transitive());
}

TEST(Action, JsonFixtures) {
  const GroupAction c4 = action_from_json(nlohmann::json::parse(read_data("c4_rotations.json")));
  EXPECT_EQ(c4.degree(), 4u);
  const GroupAction reg = action_from_json(nlohmann::json::parse(read_data("s3_regular_action.json")));
  EXPECT_EQ(reg.perms(), GroupAction::right_regular(s3()).perms());
  EXPECT_THROW(action_from_json(nlohmann::json::parse("{\"perms\": []}")), InputError);
  EXPECT_THROW(action_from_json(nlohmann::json::parse("{\"group\": {\"cyclic\": 2}, \"perms\": [[0, 1], \"x\"]}")),
               InputError);
}

TEST(Tau, ValuesAndClassFunction) {
  const Graph c4 = families::cycle(4);
  const ClassFunction t = tau(rotations(4), c4);
  EXPECT_EQ(t, (ClassFunction{CycloNum(1, 0), CycloNum(1, 4), CycloNum(1, 0), CycloNum(1, 4)}));
  // conjugating by an automorphism preserves tau, normal H or not
  for (const FiniteGroup& g : {s3(), dihedral(4), dihedral(6), cyclic_product(2, 6), dihedral(12)}) {
    const GroupAction a = GroupAction::right_regular(g);
    for (const GroupSubset& h :
         {GroupSubset{1, g.inverse(1)}, GroupSubset{g.order() - 1}, GroupSubset{1, g.inverse(1), g.order() - 1}}) {
      if (!is_connecting_set(g, h).symmetric) continue;
      const Graph c = cayley_graph(g, h);
      EXPECT_TRUE(is_class_function(g, tau(a, c)));
      for (std::size_t l = 1; l <= 3; ++l) EXPECT_TRUE(is_class_function(g, tau_power(a, c, l)));
    }
  }
  EXPECT_TRUE(is_class_function(s3(), tau(s3_natural(), families::complete(3))));
}

TEST(Tau, TauPowerOneIsTau) {
  const Graph p = cayley_graph(dihedral(5), {1, 4, 5});
  const GroupAction a = GroupAction::right_regular(dihedral(5));
  EXPECT_EQ(tau_power(a, p, 1), tau(a, p));
  EXPECT_THROW(tau_power(a, p, 0), InputError);
  EXPECT_THROW(tau(a, families::cycle(10)), InputError);  // not automorphisms
}

TEST(Tau, PermutationCharacterDegreeCount) {
  for (const auto& [a, t] : {std::pair{rotations(6), cyclic_character_table(6)},
                             std::pair{s3_natural(), s3_table()},
                             std::pair{GroupAction::right_regular(s3()), s3_table()}}) {
    const ClassFunction psi = permutation_character(a);
    Rational total = 0;
    for (const auto& chi : t.characters)
      total += inner_product(psi, chi).rational_value() * static_cast<long>(chi.degree);
    EXPECT_EQ(total, static_cast<long>(a.degree()));
  }
}

TEST(Tau, KnownValues) {
  const TauSpectrum c4 = spectrum_via_tau(rotations(4), families::cycle(4), cyclic_character_table(4));
  EXPECT_EQ(c4.nullity, 2u);
  EXPECT_EQ(c4.rank_nullity, 2u);
  EXPECT_TRUE(c4.spectrum.same_multiset(circulant_spectrum(CirculantSpec(4, {1, 3}))));
  expect_matches_char_poly(c4.spectrum, families::cycle(4));

  const TauSpectrum c5 = spectrum_via_tau(rotations(5), families::cycle(5), cyclic_character_table(5));
  EXPECT_EQ(c5.nullity, 0u);
  EXPECT_FALSE(c5.singular());

  const Graph k33 = cayley_graph(FiniteGroup::cyclic(6), {1, 3, 5});
  const TauSpectrum k = spectrum_via_tau(rotations(6), k33, cyclic_character_table(6));
  EXPECT_EQ(k.nullity, 4u);
  expect_matches_char_poly(k.spectrum, k33);
}

TEST(Tau, NaturalActionOnTriangle) {
  const TauSpectrum s = spectrum_via_tau(s3_natural(), families::complete(3), s3_table());
  ASSERT_EQ(s.spectrum.entries.size(), 2u);
  EXPECT_EQ(s.spectrum.entries[0].eigenvalue, CycloNum(1, -1));
  EXPECT_EQ(s.spectrum.entries[0].multiplicity, 2u);
  EXPECT_EQ(s.spectrum.entries[1].eigenvalue, CycloNum(1, 2));
  expect_matches_char_poly(s.spectrum, families::complete(3));
}

TEST(Tau, AllCirculantsAgree) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const GroupAction a = rotations(n);
    const CharacterTable t = cyclic_character_table(n);
    EXPECT_TRUE(is_multiplicity_free(a, t));
    for (const auto& spec : enumerate_circulants(n, false)) {
      const Graph g = spec.graph();
      const TauSpectrum s = spectrum_via_tau(a, g, t);
      EXPECT_TRUE(s.spectrum.same_multiset(circulant_spectrum(spec)));
      EXPECT_EQ(s.nullity, circulant_nullity(spec).nullity);
      if (n <= 8) expect_matches_char_poly(s.spectrum, g);
    }
  }
}

TEST(Tau, RegularS3IsRefused) {
  const GroupAction a = GroupAction::right_regular(s3());
  EXPECT_FALSE(is_multiplicity_free(a, s3_table()));
  EXPECT_THROW(spectrum_via_tau(a, cayley_graph(s3(), {1, 2, 3}), s3_table()), InputError);
  CharacterTable partial = s3_table();
  partial.characters.pop_back();
  EXPECT_THROW(is_multiplicity_free(a, partial), InputError);
}

TEST(Moments, Examples) {
  const FiniteGroup g = s3();
  const GroupAction a = GroupAction::right_regular(g);
  const Graph k33 = cayley_graph(g, {1, 2, 3});
  const auto m = character_moments(a, k33, s3_table(), 0, 2);
  EXPECT_EQ(m, (std::vector<CycloNum>{CycloNum(1, 3), CycloNum(1, 9)}));  // k, k^2
  // standard character: eigenvalue 0 on its module, so every moment is 0
  for (const auto& x : character_moments(a, k33, s3_table(), 2, 3)) EXPECT_TRUE(x.is_zero());
  // sign character: eigenvalue -3 on the sign module
  EXPECT_EQ(character_moments(a, k33, s3_table(), 1, 3),
            (std::vector<CycloNum>{CycloNum(1, -3), CycloNum(1, 9), CycloNum(1, -27)}));
  // absent character: natural action has no sign component
  for (const auto& x : character_moments(s3_natural(), families::complete(3), s3_table(), 1, 3))
    EXPECT_TRUE(x.is_zero());
  EXPECT_THROW(character_moments(a, k33, s3_table(), 0, 0), InputError);
  EXPECT_THROW(character_moments(a, k33, s3_table(), 3, 1), InputError);
}

TEST(Tau, ActionValues) {
  const Graph c4 = families::cycle(4);
  const GroupAction r = rotations(4);
  const ClassFunction t = tau(r, c4);
  EXPECT_EQ(t[1], CycloNum(1, 4));
  EXPECT_EQ(t[0], CycloNum(1, 0));
  EXPECT_EQ(t[2], CycloNum(1, 0));
  EXPECT_EQ(tau_power(r, c4, 2)[0], CycloNum(1, 2 * static_cast<long>(c4.size())));
  EXPECT_EQ(tau_power(r, c4, 2)[2], CycloNum(1, 8));
  const ClassFunction psi = permutation_character(r);
  EXPECT_EQ(psi, (ClassFunction{CycloNum(1, 4), CycloNum(1, 0), CycloNum(1, 0), CycloNum(1, 0)}));
  const GroupAction refl(FiniteGroup::cyclic(2), {VertexPermutation::identity(4), VertexPermutation({0, 3, 2, 1})});
  EXPECT_EQ(permutation_character(refl)[1], CycloNum(1, 2));
  EXPECT_EQ(inner_product(tau(r, c4), cyclic_character_table(4).characters[1]), CycloNum(4));
  EXPECT_TRUE(is_multiplicity_free(GroupAction(FiniteGroup::cyclic(1), {VertexPermutation::identity(1)}),
                                   cyclic_character_table(1)));
}

TEST(Tau, BurnsideAndValency) {
  // <psi, 1> = 1 for transitive actions; <tau, 1> = k and <tau^2, 1> = k^2
  for (std::size_t n = 3; n <= 10; ++n) {
    const GroupAction a = rotations(n);
    const CharacterTable t = cyclic_character_table(n);
    EXPECT_EQ(inner_product(permutation_character(a), t.characters[0]), CycloNum(1, 1));
    for (const auto& spec : enumerate_circulants(n, true)) {
      const long k = static_cast<long>(spec.hstar().size());
      const auto m = character_moments(a, spec.graph(), t, 0, 2);
      EXPECT_EQ(m[0], CycloNum(1, k));
      EXPECT_EQ(m[1], CycloNum(1, k * k));
    }
  }
}
