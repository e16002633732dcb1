#pragma once

#include "balidx/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace balidx {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>> &rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  IntegerMatrix transposed() const;

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix &m);

enum class PivotRule {
  smallest_magnitude, ///< smallest nonzero |entry| in the column, lowest row on ties
  first_nonzero,      ///< first nonzero entry at or below the pivot row
};

struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U; ///< unimodular, U * M == H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot), zero rows at the bottom.
HermiteForm hnf(const IntegerMatrix &m, PivotRule rule = PivotRule::smallest_magnitude);

/// Basis of a sublattice of Z^dimension.
struct LatticeBasis {
  std::size_t dimension = 0;
  std::vector<std::vector<Integer>> basis;
};

/// Basis of the left kernel {v in Z^rows : v * M == 0}.
LatticeBasis kernel_basis(const IntegerMatrix &m);

struct SmithForm {
  IntegerMatrix S; ///< diagonal, d1 | d2 | ..., nonnegative
  IntegerMatrix U;
  IntegerMatrix V; ///< U * M * V == S
};

SmithForm snf(const IntegerMatrix &m);

struct FunctionalGcd {
  Integer g;                    ///< nonnegative generator of w(L)
  std::vector<Integer> combiner; ///< lambda with w . sum(lambda_i b_i) == g
};

/// Image of the lattice under the functional v -> w . v is g*Z.
FunctionalGcd functional_gcd(const LatticeBasis &lattice, std::span<const Integer> w);

/// sum_i lambda_i * basis[i]
std::vector<Integer> combine_basis(const LatticeBasis &lattice, std::span<const Integer> lambda);

} // namespace balidx
