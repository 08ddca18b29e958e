#ifndef SINGRAPH_CYCLOTOMIC_HPP
#define SINGRAPH_CYCLOTOMIC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "singraph/poly.hpp"

namespace sg {

std::size_t euler_phi(std::size_t n);
std::vector<std::size_t> divisors(std::size_t n);

// Memoized; the returned reference stays valid for the life of the process.
const IntPoly& cyclotomic_poly(std::size_t d);

// True iff `divisor` divides `dividend` exactly over the rationals.
bool poly_divides(const IntPoly& divisor, const IntPoly& dividend);

// An element of Q(zeta_m), stored as the canonical remainder modulo Phi_m:
// phi(m) rational coefficients of 1, zeta, zeta^2, ...
//
// Operands with different conductors are lifted to the lcm of the two.
class CycloNum {
 public:
  CycloNum() : CycloNum(1) {}
  explicit CycloNum(std::size_t m);  // zero
  CycloNum(std::size_t m, const Rational& q);
  // Arbitrary-length polynomial in zeta_m; reduced on construction.
  CycloNum(std::size_t m, std::vector<Rational> poly);

  static CycloNum root_of_unity(std::size_t m, long long k);

  std::size_t conductor() const noexcept { return m_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws InputError unless is_rational()

  // Same element written in Q(zeta_target); target must be a multiple of m.
  CycloNum lifted(std::size_t target) const;

  CycloNum conjugate() const;
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& q);
  CycloNum& operator/=(const Rational& q);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
  friend CycloNum operator/(CycloNum a, const Rational& q) { return a /= q; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  // Total order on (conductor, coefficients); only for deterministic sorting.
  friend bool operator<(const CycloNum& a, const CycloNum& b);

  // e.g. "-1 - z3" with z<m> standing for zeta_m
  std::string to_string() const;

 private:
  std::size_t m_;
  std::vector<Rational> c_;
};

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

// {"m": int, "coeffs": [[num, den], ...]}
nlohmann::json to_json(const CycloNum& z);
// Also accepts a bare integer or a [num, den] pair as a rational in Q(zeta_1).
CycloNum cyclo_from_json(const nlohmann::json& j);

}  // namespace sg

#endif  // SINGRAPH_CYCLOTOMIC_HPP
