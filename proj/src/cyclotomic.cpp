#include "singraph/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "singraph/errors.hpp"

namespace sg {

std::size_t euler_phi(std::size_t n) {
  if (n == 0) throw InputError("euler_phi: n must be positive");
  std::size_t result = n;
  std::size_t rest = n;
  for (std::size_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

std::mutex& cyclotomic_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::size_t, IntPoly>& cyclotomic_table() {
  static std::map<std::size_t, IntPoly> table;
  return table;
}

// Caller holds the lock.
const IntPoly& cyclotomic_locked(std::size_t d) {
  auto& table = cyclotomic_table();
  if (auto it = table.find(d); it != table.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
  IntPoly p = IntPoly::monomial(1, d) - IntPoly({1});
  for (std::size_t e : divisors(d)) {
    if (e == d) break;
    auto [q, r] = divmod_monic(p, cyclotomic_locked(e));
    if (!r.is_zero()) throw InconsistencyError("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  return table.emplace(d, std::move(p)).first->second;
}

}  // namespace

const IntPoly& cyclotomic_poly(std::size_t d) {
  if (d == 0) throw InputError("cyclotomic_poly: d must be positive");
  std::lock_guard<std::mutex> lock(cyclotomic_mutex());
  return cyclotomic_locked(d);
}

bool poly_divides(const IntPoly& divisor, const IntPoly& dividend) {
  if (divisor.is_zero()) throw InputError("poly_divides: zero divisor");
  // Long division over Q
  const auto& d = divisor.coeffs();
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const std::size_t dd = d.size() - 1;
  const Rational lead(d.back());
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    const Rational c = rem[k] / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d[j];
  }
  for (std::size_t i = 0; i < std::min(dd, rem.size()); ++i)
    if (rem[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

CycloNum::CycloNum(std::size_t m) : m_(m) {
  if (m == 0) throw InputError("CycloNum: conductor must be positive");
  c_.assign(euler_phi(m), Rational(0));
}

CycloNum::CycloNum(std::size_t m, const Rational& q) : CycloNum(m) {
  c_[0] = q;
  c_[0].canonicalize();
}

CycloNum::CycloNum(std::size_t m, std::vector<Rational> poly) : m_(m), c_(std::move(poly)) {
  if (m == 0) throw InputError("CycloNum: conductor must be positive");
  for (auto& c : c_) c.canonicalize();
  reduce_mod_monic(c_, cyclotomic_poly(m));
}

CycloNum CycloNum::root_of_unity(std::size_t m, long long k) {
  if (m == 0) throw InputError("root_of_unity: m must be positive");
  const long long mm = static_cast<long long>(m);
  const std::size_t e = static_cast<std::size_t>(((k % mm) + mm) % mm);
  std::vector<Rational> p(e + 1);
  p[e] = 1;
  return CycloNum(m, std::move(p));
}

bool CycloNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw InputError("CycloNum " + to_string() + " is not rational");
  return c_[0];
}

CycloNum CycloNum::lifted(std::size_t target) const {
  if (target == m_) return *this;
  if (target == 0 || target % m_ != 0)
    throw InputError("CycloNum: cannot lift conductor " + std::to_string(m_) + " to " +
                     std::to_string(target));
  // zeta_m = zeta_target^(target/m)
  const std::size_t step = target / m_;
  std::vector<Rational> p(c_.empty() ? 1 : (c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return CycloNum(target, std::move(p));
}

CycloNum CycloNum::conjugate() const {
  // zeta^i -> zeta^(m-i)
  std::vector<Rational> p(m_ + 1);
  p[0] = c_.empty() ? Rational(0) : c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i) p[m_ - i] = c_[i];
  return CycloNum(m_, std::move(p));
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

void align(CycloNum& a, CycloNum& b) {
  if (a.conductor() == b.conductor()) return;
  const std::size_t l = std::lcm(a.conductor(), b.conductor());
  a = a.lifted(l);
  b = b.lifted(l);
}

}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.m_ != m_) {
    CycloNum b = o;
    align(*this, b);
    return *this += b;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (o.m_ != m_) {
    CycloNum b = o;
    align(*this, b);
    return *this *= b;
  }
  std::vector<Rational> p(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
  }
  reduce_mod_monic(p, cyclotomic_poly(m_));
  c_ = std::move(p);
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

CycloNum& CycloNum::operator/=(const Rational& q) {
  if (q == 0) throw InputError("CycloNum: division by zero");
  for (auto& c : c_) c /= q;
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  CycloNum x = a, y = b;
  align(x, y);
  return x.c_ == y.c_;
}

bool operator<(const CycloNum& a, const CycloNum& b) {
  if (a.m_ == b.m_) return a.c_ < b.c_;
  CycloNum x = a, y = b;
  align(x, y);
  return x.c_ < y.c_;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag;
      if (i > 0) os << '*';
    }
    if (i >= 1) os << 'z' << m_;
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw InputError("not an integer: " + j.get<std::string>());
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const CycloNum& z) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : z.coeffs())
    coeffs.push_back({integer_to_json(c.get_num()), integer_to_json(c.get_den())});
  return {{"m", z.conductor()}, {"coeffs", coeffs}};
}

namespace {

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_array() && j.size() == 2) {
    Integer den = integer_from_json(j[1]);
    if (den == 0) throw InputError("zero denominator in " + j.dump());
    Rational q(integer_from_json(j[0]), den);
    q.canonicalize();
    return q;
  }
  return Rational(integer_from_json(j));
}

}  // namespace

CycloNum cyclo_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() || j.is_string() || j.is_array()) return CycloNum(1, rational_from_json(j));
  if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
    throw InputError("expected {\"m\": ..., \"coeffs\": [...]}, got " + j.dump());
  if (!j["m"].is_number_unsigned() || j["m"].get<std::size_t>() == 0)
    throw InputError("conductor must be a positive integer: " + j.dump());
  const std::size_t m = j["m"].get<std::size_t>();
  const auto& cj = j["coeffs"];
  if (!cj.is_array()) throw InputError("coeffs must be an array: " + j.dump());
  std::vector<Rational> poly;
  for (const auto& c : cj) poly.push_back(rational_from_json(c));
  return CycloNum(m, std::move(poly));
}

}  // namespace sg
