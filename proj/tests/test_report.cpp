#include <gtest/gtest.h>

#include "group_fixtures.hpp"
#include "singraph/errors.hpp"
#include "singraph/report.hpp"

using namespace sg;
using nlohmann::json;

TEST(Report, NullityC8) {
  Diagnostics d;
  const json r = analyze_nullity(families::cycle(8), d);
  EXPECT_EQ(r["nullity"], 2);
  EXPECT_EQ(r["rank"], 6);
  EXPECT_EQ(r["regular"], 2);
  EXPECT_GT(r["complement_minus_one_multiplicity"].get<std::size_t>(), 0u);
  EXPECT_TRUE(r["balance"]["verified"].get<bool>());
  EXPECT_TRUE(r["duplicate_neighborhood"].is_null());
}

TEST(Report, NullityNonSingular) {
  Diagnostics d;
  const json r = analyze_nullity(families::path(4), d);
  EXPECT_EQ(r["nullity"], 0);
  EXPECT_FALSE(r["singular"].get<bool>());
  EXPECT_TRUE(r["balance"].is_null());
  EXPECT_TRUE(r["regular"].is_null());
}

TEST(Report, IsolatedVertexIsAFinding) {
  Diagnostics d;
  const json r = analyze_nullity(parse_graph(read_data("isolated.txt")), d);
  EXPECT_EQ(r["nullity"], 1);
  EXPECT_TRUE(r["balance"]["certificate"].is_null());
  ASSERT_EQ(d.findings.size(), 1u);
  EXPECT_NE(d.findings[0].find("one sign"), std::string::npos);
}

TEST(Report, Circulant) {
  Diagnostics d;
  const json r = analyze_circulant(CirculantSpec(12, {1, 5, 7, 11}), true, d);
  EXPECT_EQ(r["routes"]["cyclotomic"], r["routes"]["rank"]);
  EXPECT_EQ(r["nullity"], nullity(CirculantSpec(12, {1, 5, 7, 11}).graph().adjacency_matrix()));
  EXPECT_EQ(r["spectrum"].size() > 0, true);
  EXPECT_TRUE(d.warnings.empty());
}

TEST(Report, DisconnectedCirculant) {
  Diagnostics d;
  const json r = analyze_circulant(CirculantSpec(8, {2, 6}), false, d);
  EXPECT_EQ(r["nullity"], 4);
  EXPECT_EQ(r["components"]["count"], 2);
  EXPECT_EQ(r["components"]["component_nullity"], 2);
  EXPECT_EQ(d.warnings.size(), 1u);
}

TEST(Report, CayleyS3) {
  Diagnostics d;
  const json r = analyze_cayley(s3(), {1, 2, 3}, s3_table(), d);
  EXPECT_EQ(r["nullity"], 4);
  EXPECT_EQ(r["routes"]["character-sum"], 4);
  EXPECT_TRUE(r["normal"].get<bool>());
  ASSERT_EQ(r["vanishing_characters"].size(), 1u);
  EXPECT_EQ(r["vanishing_characters"][0]["bound"], 4);
  EXPECT_EQ(r["coset_bound"], 4);  // K = A_3: (6/3)(3-1)
}

TEST(Report, CayleyNonNormalWarns) {
  Diagnostics d;
  // D_4 generated by r, r^-1 and one reflection: not normal
  const json r = analyze_cayley(dihedral(4), {1, 3, 4}, std::nullopt, d);
  EXPECT_FALSE(r["normal"].get<bool>());
  EXPECT_TRUE(r["connecting_set"]["ok"].get<bool>());
  EXPECT_THROW(analyze_cayley(dihedral(4), {1}, std::nullopt, d), InputError);
}

TEST(Report, TauRefusesRegularS3) {
  Diagnostics d;
  const FiniteGroup g = s3();
  const json r =
      analyze_tau(cayley_graph(g, {1, 2, 3}), GroupAction::right_regular(g), s3_table(), 0, d);
  EXPECT_FALSE(r["multiplicity_free"].get<bool>());
  EXPECT_TRUE(r["spectrum"].is_null());
  EXPECT_TRUE(r["refused"].is_string());
  EXPECT_EQ(r["moments"].size(), 3u);
  EXPECT_EQ(r["moments"][2]["multiplicity_in_psi"], 2);
}

TEST(Report, TauCirculant) {
  Diagnostics d;
  const json r = analyze_tau(families::cycle(4),
                             action_from_json(json::parse(read_data("c4_rotations.json"))),
                             cyclic_character_table(4), 0, d);
  EXPECT_TRUE(r["multiplicity_free"].get<bool>());
  EXPECT_EQ(r["routes"]["tau"], 2);
  EXPECT_EQ(r["tau"], json::parse("[0, 4, 0, 4]"));
}

TEST(Report, CertifyModes) {
  Diagnostics d;
  const Graph c8 = families::cycle(8);
  json r = analyze_certify(c8, std::nullopt, d);
  EXPECT_EQ(r["mode"], "extract");
  EXPECT_TRUE(r["verified"].get<bool>());
  const auto example = certificate_from_json(json::parse(read_data("c8_example_certificate.json")));
  Diagnostics d2;
  r = analyze_certify(c8, example, d2);
  EXPECT_TRUE(r["verified"].get<bool>());
  EXPECT_EQ(r["bound"], 4);
  EXPECT_FALSE(r["bound_holds"].get<bool>());
  EXPECT_EQ(d2.findings.size(), 1u);
  const auto tampered = certificate_from_json(json::parse(read_data("c8_tampered_certificate.json")));
  r = analyze_certify(c8, tampered, d);
  EXPECT_FALSE(r["verified"].get<bool>());
  r = analyze_certify(families::path(4), std::nullopt, d);
  EXPECT_TRUE(r["certificate"].is_null());
}

TEST(Report, Sweep) {
  Diagnostics d;
  SweepOptions o;
  o.from = 2;
  o.to = 10;
  const SweepResult r = sweep_circulants(o, d);
  EXPECT_TRUE(r.summary["routes_agree"].get<bool>());
  std::size_t expected = 0;
  for (std::size_t n = 2; n <= 10; ++n) expected += (std::size_t{1} << (n / 2)) - 1;
  EXPECT_EQ(r.summary["instances"], expected);
  EXPECT_EQ(std::count(r.csv.begin(), r.csv.end(), '\n'), static_cast<long>(expected + 1));
  EXPECT_EQ(r.csv.substr(0, r.csv.find('\n')), "n,hstar,connected,nullity_cyclotomic,nullity_rank,divisors");

  o.primes_only = true;
  const SweepResult p = sweep_circulants(o, d);
  for (const auto& row : p.summary["per_n"]) {
    EXPECT_TRUE(row["prime"].get<bool>());
    EXPECT_EQ(row["singular_connected"], 0);
  }
}

TEST(Report, SweepGuardrail) {
  Diagnostics d;
  SweepOptions o;
  o.from = 2;
  o.to = 25;
  EXPECT_THROW(sweep_circulants(o, d), InputError);
  o.max_n = 21;
  o.from = o.to = 21;
  EXPECT_NO_THROW(sweep_circulants(o, d));
  o.max_n.reset();
  o.force = true;
  EXPECT_NO_THROW(sweep_circulants(o, d));
  o.from = 1;
  EXPECT_THROW(sweep_circulants(o, d), InputError);
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
}

TEST(Report, Deterministic) {
  Diagnostics d1, d2;
  SweepOptions o;
  o.from = 3;
  o.to = 12;
  EXPECT_EQ(sweep_circulants(o, d1).summary.dump(), sweep_circulants(o, d2).summary.dump());
  EXPECT_EQ(analyze_nullity(families::petersen(), d1).dump(), analyze_nullity(families::petersen(), d2).dump());
}
