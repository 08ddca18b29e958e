#include "singraph/linalg.hpp"

#include <utility>

#include "singraph/errors.hpp"

namespace sg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (auto& x : m.a_) x = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("IntMatrix: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("IntMatrix: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix: shape mismatch in product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw InputError("IntMatrix: vector length mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

nlohmann::json IntMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back(integer_to_json((*this)(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    // Bareiss step: every update divides exactly by the previous pivot.
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::size_t nullity(const IntMatrix& m) {
  if (!m.square()) throw InputError("nullity: matrix is not square");
  return m.cols() - rank(m);
}

namespace {

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

}  // namespace

KernelBasis kernel_basis(const IntMatrix& m) {
  // Fraction-free Gauss-Jordan: rows stay integral, each row divided by its
  // content after every update.
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Integer f = a(i, c), piv = a(r, c);
      Integer g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        a(i, j) = piv * a(i, j) - f * a(r, j);
        g = gcd(g, a(i, j));
      }
      if (g > 1)
        for (std::size_t j = 0; j < cols; ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  Integer l = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) l = lcm(l, a(i, pivot_col[i]));

  KernelBasis basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    IntVector v(cols);
    v[f] = l;
    // Row i reads a(i, pc) x_pc + sum_free a(i, free) x_free = 0.
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      const Integer& piv = a(i, pivot_col[i]);
      Integer x = -a(i, f) * l;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
      v[pivot_col[i]] = x;
    }
    make_primitive(v);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.square()) throw InputError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly({1});
  // Coefficients highest degree first while iterating; p = det(xI - M_r)
  // for the leading r x r block, grown one row/column at a time by a
  // Toeplitz product.
  std::vector<Integer> p{1, -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // t_0 = 1, t_1 = -a_rr, t_k = -R M^(k-2) C for k >= 2
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -m(r, r);
    IntVector col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Integer s = 0;
      for (std::size_t j = 0; j < r; ++j) s += m(r, j) * col[j];
      t[k] = -s;
      if (k == r + 1) break;
      IntVector next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<Integer> q(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  return IntPoly(std::vector<Integer>(p.rbegin(), p.rend()));
}

std::size_t integer_eigenvalue_multiplicity(const IntMatrix& m, const Integer& lambda) {
  IntPoly p = char_poly(m);
  const IntPoly lin = IntPoly::x_minus(lambda);
  std::size_t mult = 0;
  while (!p.is_zero()) {
    auto [q, r] = divmod_monic(p, lin);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

CycloNum eval_poly_cyclotomic(const IntPoly& p, const CycloNum& z) {
  CycloNum acc(z.conductor());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc += CycloNum(z.conductor(), Rational(*it));
  }
  return acc;
}

}  // namespace sg
