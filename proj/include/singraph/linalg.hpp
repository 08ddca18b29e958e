#ifndef SINGRAPH_LINALG_HPP
#define SINGRAPH_LINALG_HPP

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "singraph/cyclotomic.hpp"
#include "singraph/poly.hpp"

namespace sg {

using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix ones(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  IntVector operator*(const IntVector& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  nlohmann::json to_json() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

// cols - rank; throws InputError for non-square input.
std::size_t nullity(const IntMatrix& m);

// Integer basis of the rational null space. Each vector is primitive with
// its first nonzero entry positive. Pivots are chosen leftmost column first,
// smallest row index within a column, so the basis is a function of M alone.
struct KernelBasis {
  std::vector<IntVector> vectors;
};
KernelBasis kernel_basis(const IntMatrix& m);

// det(xI - M) via the Berkowitz algorithm (division free).
IntPoly char_poly(const IntMatrix& m);

// Multiplicity of `lambda` as a root of char_poly(m).
std::size_t integer_eigenvalue_multiplicity(const IntMatrix& m, const Integer& lambda);

// Horner evaluation in Q(zeta_m).
CycloNum eval_poly_cyclotomic(const IntPoly& p, const CycloNum& z);

}  // namespace sg

#endif  // SINGRAPH_LINALG_HPP
