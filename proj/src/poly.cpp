#include "singraph/poly.hpp"

#include <algorithm>
#include <sstream>

#include "singraph/errors.hpp"

namespace sg {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_minus(const Integer& root) { return IntPoly(std::vector<Integer>{-root, 1}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::shifted(const Integer& shift) const {
  // Horner in the ring: acc = acc * (x + shift) + c
  IntPoly acc;
  const IntPoly lin(std::vector<Integer>{shift, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += IntPoly(std::vector<Integer>{*it});
  }
  return acc;
}

IntPoly IntPoly::pow(std::size_t e) const {
  IntPoly result({1});
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag;
      if (k > 0) os << '*';
    }
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

PolyDivision divmod_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  if (divisor.leading() != 1) throw InputError("divisor is not monic: " + divisor.to_string());
  const auto& d = divisor.coeffs();
  std::vector<Integer> rem = dividend.coeffs();
  const std::size_t dd = d.size() - 1;
  if (rem.size() <= dd) return {IntPoly{}, dividend};
  std::vector<Integer> quo(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Integer c = rem[k];
    if (c == 0) continue;
    quo[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d[j];
  }
  rem.resize(dd);
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

void reduce_mod_monic(std::vector<Rational>& p, const IntPoly& divisor) {
  const auto& d = divisor.coeffs();
  const std::size_t dd = d.size() - 1;
  for (std::size_t k = p.size(); k-- > dd;) {
    if (p[k] == 0) continue;
    const Rational c = p[k];
    for (std::size_t j = 0; j <= dd; ++j) p[k - dd + j] -= c * d[j];
  }
  p.resize(dd);
}

}  // namespace sg
