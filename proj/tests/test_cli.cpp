#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

std::string data(const std::string& name) { return std::string(SG_TEST_DATA) + "/" + name; }

CliRun sg(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + SG_BINARY + "' " + args + " 2>/dev/null";
  CliRun r;
  std::FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json report(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Nullity) {
  const CliRun r = sg("nullity --graph " + data("c8.txt"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["nullity"], 2);
  EXPECT_EQ(report(r).count("timing"), 0u);
  const CliRun t = sg("--timing nullity --graph " + data("c8.txt"));
  EXPECT_EQ(report(t).count("timing"), 1u);
}

TEST(Cli, Circulant) {
  const CliRun r = sg("circulant --n 12 --hstar 1,5,7,11 --spectrum");
  ASSERT_EQ(r.code, 0);
  const auto j = report(r);
  EXPECT_EQ(j["routes"]["cyclotomic"], j["routes"]["rank"]);
  EXPECT_TRUE(j["spectrum"].is_array());
  EXPECT_EQ(sg("circulant --n 12 --hstar 1,5,7").code, 2);
  EXPECT_EQ(sg("circulant --n 12 --hstar 1,x").code, 2);
}

TEST(Cli, Cayley) {
  const CliRun r =
      sg("cayley --group " + data("s3_group.json") + " --hset 1,2,3 --chartable " + data("s3_chartable.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["nullity"], 4);
  EXPECT_EQ(sg("cayley --group " + data("s3_group.json") + " --hset 0,1").code, 2);
}

TEST(Cli, Tau) {
  CliRun r = sg("tau --graph " + data("c4.txt") + " --action " + data("c4_rotations.json") + " --chartable " +
             data("c4_chartable.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["routes"]["tau"], 2);
  r = sg("tau --graph " + data("c5.txt") + " --action " + data("c5_rotations.json") + " --chartable " +
         data("c5_chartable.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["nullity"], 0);
  r = sg("tau --graph " + data("s3_transpositions.txt") + " --action " + data("s3_regular_action.json") +
         " --chartable " + data("s3_chartable.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(report(r)["multiplicity_free"].get<bool>());
  // rotations of C_4 are not automorphisms of P_4
  EXPECT_EQ(sg("tau --graph " + data("p4.txt") + " --action " + data("c4_rotations.json") + " --chartable " +
               data("c4_chartable.json"))
                .code,
            2);
}

TEST(Cli, Certify) {
  CliRun r = sg("certify --graph " + data("c8.txt") + " --verify " + data("c8_example_certificate.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(report(r)["verified"].get<bool>());
  r = sg("certify --graph " + data("c8.txt") + " --verify " + data("c8_tampered_certificate.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_FALSE(report(r)["verified"].get<bool>());
  r = sg("certify --graph " + data("c4.txt"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["certificate"]["X"], nlohmann::json::parse("[0]"));
  // isolated vertex: reported as a finding, not a crash
  r = sg("certify --graph " + data("isolated.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(report(r)["certificate"].is_null());
}

TEST(Cli, Sweep) {
  CliRun r = sg("sweep --n-range 2..10");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(report(r)["routes_agree"].get<bool>());
  EXPECT_EQ(report(r)["csv"][0], "n,hstar,connected,nullity_cyclotomic,nullity_rank,divisors");
  EXPECT_EQ(sg("sweep --n-range 2..40").code, 2);
  EXPECT_EQ(sg("sweep --n-range 2..6", "SG_MAX_N=5").code, 2);
  EXPECT_EQ(sg("sweep --n-range 2..22", "SG_MAX_N=22").code, 0);
  EXPECT_EQ(sg("sweep --n-range 21..21 --force").code, 0);
  EXPECT_EQ(sg("sweep --n-range 9..3").code, 2);
  EXPECT_EQ(sg("sweep --family path --n-range 2..3").code, 2);
  const std::string csv = std::string(SG_TEST_OUT) + "/sweep.csv";
  r = sg("sweep --n-range 2..6 --csv '" + csv + "'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r).count("csv"), 0u);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,hstar,connected,nullity_cyclotomic,nullity_rank,divisors");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(sg("nullity --graph /nonexistent/file").code, 2);
  EXPECT_EQ(sg("nullity").code, 2);
  EXPECT_EQ(sg("bogus").code, 2);
  EXPECT_EQ(sg("").code, 2);
  EXPECT_EQ(sg("nullity --graph " + data("s3_group.json")).code, 2);
  EXPECT_EQ(sg("--help").code, 0);
}

TEST(Cli, Deterministic) {
  const std::string cases[] = {"nullity --graph " + data("petersen.txt"), "circulant --n 10 --hstar 1,4,6,9 --spectrum",
                               "sweep --n-range 2..12"};
  for (const std::string& args : cases) {
    const CliRun a = sg(args), b = sg(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, KnownValues) {
  EXPECT_EQ(report(sg("nullity --graph " + data("c4.txt")))["nullity"], 2);
  EXPECT_EQ(report(sg("nullity --graph " + data("p4.txt")))["nullity"], 0);
  EXPECT_EQ(report(sg("nullity --graph " + data("k33.txt")))["nullity"], 4);
  auto j = report(sg("circulant --n 4 --hstar 1,3"));
  EXPECT_EQ(j["nullity"], 2);
  EXPECT_EQ(j["divisors"], nlohmann::json::parse("[4]"));
  EXPECT_EQ(report(sg("circulant --n 12 --hstar 1,11"))["nullity"], 2);
  EXPECT_EQ(report(sg("circulant --n 5 --hstar 1,4"))["nullity"], 0);
  const std::string c6 = std::string(SG_TEST_OUT) + "/c6.json";
  std::ofstream(c6) << "{\"cyclic\": 6}";
  j = report(sg("cayley --group '" + c6 + "' --hset 1,3,5"));
  EXPECT_FALSE(j["tensor_decomposition"].is_null());
  EXPECT_EQ(j["coset_bound"], 4);
  EXPECT_EQ(j["nullity"], 4);
  EXPECT_EQ(report(sg("cayley --group '" + c6 + "' --hset 1,5"))["nullity"], 0);
  j = report(sg("sweep --n-range 13..13"));
  EXPECT_EQ(j["per_n"][0]["singular_connected"], 0);
  j = report(sg("sweep --n-range 4..4"));
  EXPECT_EQ(j["instances"], 3);  // {2}, {1,3}, {1,2,3}
  EXPECT_EQ(j["per_n"][0]["connected"], 2);
  EXPECT_TRUE(report(sg("sweep --n-range 8..8"))["routes_agree"].get<bool>());
  j = report(sg("tau --graph " + data("c4.txt") + " --action " + data("c4_rotations.json") + " --chartable " +
                data("c4_chartable.json")));
  EXPECT_EQ(j["spectrum"].size(), 3u);  // 2, 0 (twice), -2
}

TEST(Cli, ActionGroupByReference) {
  const std::string dir = SG_TEST_OUT;
  std::ofstream(dir + "/c4_group.json") << "{\"cyclic\": 4}";
  std::ofstream(dir + "/c4_action_ref.json")
      << "{\"group\": \"c4_group.json\", \"perms\": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}";
  const auto r = sg("tau --graph " + data("c4.txt") + " --action '" + dir + "/c4_action_ref.json' --chartable " +
                    data("c4_chartable.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(report(r)["nullity"], 2);
}
