#ifndef SINGRAPH_POLY_HPP
#define SINGRAPH_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sg {

using Integer = mpz_class;
using Rational = mpq_class;

// Univariate integer polynomial, coefficients lowest degree first.
// The coefficient vector never has a trailing zero; the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly x_minus(const Integer& root);  // x - root

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const Integer& leading() const { return c_.back(); }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  Integer operator()(const Integer& x) const;

  // p(x + shift)
  IntPoly shifted(const Integer& shift) const;
  IntPoly pow(std::size_t e) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // e.g. "x^4 - 4*x^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

// Division by a monic polynomial stays in Z[x]. Throws InputError if
// `divisor` is zero or not monic.
PolyDivision divmod_monic(const IntPoly& dividend, const IntPoly& divisor);

// Remainder of a rational polynomial (lowest degree first) modulo a monic
// integer polynomial, written in place; the result has length divisor.degree().
void reduce_mod_monic(std::vector<Rational>& p, const IntPoly& divisor);

}  // namespace sg

#endif  // SINGRAPH_POLY_HPP
