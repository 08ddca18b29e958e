#ifndef SINGRAPH_TESTS_GROUP_FIXTURES_HPP
#define SINGRAPH_TESTS_GROUP_FIXTURES_HPP

#include "oracles.hpp"
#include "singraph/group.hpp"

// S_3 with elements e, (01), (02), (12), (012), (021).
inline sg::FiniteGroup s3() { return sg::group_from_json(nlohmann::json::parse(read_data("s3_group.json"))); }

inline sg::CharacterTable s3_table() {
  return sg::parse_character_table(nlohmann::json::parse(read_data("s3_chartable.json")), s3());
}

// Direct product C_a x C_b, element (i, j) at index i * b + j.
inline sg::FiniteGroup cyclic_product(std::size_t a, std::size_t b) {
  const std::size_t n = a * b;
  std::vector<std::vector<sg::Element>> t(n, std::vector<sg::Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = ((x / b + y / b) % a) * b + (x % b + y % b) % b;
  return sg::FiniteGroup::from_table(t);
}

// Dihedral group of order 2n: r^i at index i, s r^i at index n + i.
inline sg::FiniteGroup dihedral(std::size_t n) {
  std::vector<std::vector<sg::Element>> t(2 * n, std::vector<sg::Element>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      const std::size_t fx = x / n, ix = x % n, fy = y / n, iy = y % n;
      // (s^fx r^ix)(s^fy r^iy) = s^(fx+fy) r^(+-ix + iy)
      const std::size_t i = fy ? (n - ix + iy) % n : (ix + iy) % n;
      t[x][y] = ((fx + fy) % 2) * n + i;
    }
  return sg::FiniteGroup::from_table(t);
}

#endif  // SINGRAPH_TESTS_GROUP_FIXTURES_HPP
