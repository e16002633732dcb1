#include "balidx/lattice.hpp"

#include "balidx/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace balidx {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw DomainError("ragged matrix literal");
    for (long x : row)
      data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>> &rows,
                                       std::size_t cols)
{
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DomainError("row " + std::to_string(r) + " has length " +
                        std::to_string(rows[r].size()) + ", expected " + std::to_string(cols));
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

bool IntegerMatrix::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Integer &x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const
{
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b)
{
  if (a.cols() != b.rows())
    throw DomainError("matrix product shape mismatch");
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer &x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

Integer determinant(const IntegerMatrix &m)
{
  if (m.rows() != m.cols())
    throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row of the transform matrix, sorted by column index.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

// target -= q * source
void sparse_submul(SparseRow &target, const Integer &q, const SparseRow &source)
{
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->first < s->first)) {
      out.push_back(std::move(*t++));
    } else if (t == target.end() || s->first < t->first) {
      Integer v = -q * s->second;
      out.emplace_back(s->first, std::move(v));
      ++s;
    } else {
      mpz_submul(t->second.get_mpz_t(), q.get_mpz_t(), s->second.get_mpz_t());
      if (t->second != 0)
        out.push_back(std::move(*t));
      ++t;
      ++s;
    }
  }
  target = std::move(out);
}

// new_a = x*a + y*b, new_b = u*a + v*b
void sparse_combine(SparseRow &a, SparseRow &b, const Integer &x, const Integer &y,
                    const Integer &u, const Integer &v)
{
  SparseRow na, nb;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    std::uint32_t col;
    Integer va = 0, vb = 0;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      col = ia->first;
      va = ia++->second;
    } else if (ia == a.end() || ib->first < ia->first) {
      col = ib->first;
      vb = ib++->second;
    } else {
      col = ia->first;
      va = ia++->second;
      vb = ib++->second;
    }
    Integer ra = x * va + y * vb;
    Integer rb = u * va + v * vb;
    if (ra != 0)
      na.emplace_back(col, std::move(ra));
    if (rb != 0)
      nb.emplace_back(col, std::move(rb));
  }
  a = std::move(na);
  b = std::move(nb);
}

struct Elimination {
  std::vector<std::vector<Integer>> H;
  std::vector<SparseRow> U;
  std::size_t cols = 0;
  std::size_t rank = 0;

  explicit Elimination(const IntegerMatrix &m) : H(m.rows()), U(m.rows()), cols(m.cols())
  {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      H[r].assign(m.row(r).begin(), m.row(r).end());
      U[r].emplace_back(static_cast<std::uint32_t>(r), Integer(1));
    }
  }

  void submul_row(std::size_t target, const Integer &q, std::size_t source, std::size_t from)
  {
    auto &t = H[target];
    const auto &s = H[source];
    for (std::size_t c = from; c < cols; ++c)
      if (s[c] != 0)
        mpz_submul(t[c].get_mpz_t(), q.get_mpz_t(), s[c].get_mpz_t());
    sparse_submul(U[target], q, U[source]);
  }

  void negate_row(std::size_t r)
  {
    for (auto &x : H[r])
      x = -x;
    for (auto &entry : U[r])
      entry.second = -entry.second;
  }

  void swap_rows(std::size_t a, std::size_t b)
  {
    if (a == b)
      return;
    std::swap(H[a], H[b]);
    std::swap(U[a], U[b]);
  }

  // Euclid by repeated remainders against the smallest entry.
  bool eliminate_smallest(std::size_t p, std::size_t c)
  {
    const std::size_t rows = H.size();
    for (;;) {
      std::size_t best = rows;
      for (std::size_t r = p; r < rows; ++r) {
        if (H[r][c] == 0)
          continue;
        if (best == rows || mpz_cmpabs(H[r][c].get_mpz_t(), H[best][c].get_mpz_t()) < 0)
          best = r;
      }
      if (best == rows)
        return false;
      swap_rows(p, best);

      bool clean = true;
      Integer q;
      for (std::size_t r = p + 1; r < rows; ++r) {
        if (H[r][c] == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), H[r][c].get_mpz_t(), H[p][c].get_mpz_t());
        submul_row(r, q, p, c);
        if (H[r][c] != 0)
          clean = false;
      }
      if (clean)
        return true;
    }
  }

  // Unimodular 2x2 combinations via the extended gcd.
  bool eliminate_first(std::size_t p, std::size_t c)
  {
    const std::size_t rows = H.size();
    std::size_t first = p;
    while (first < rows && H[first][c] == 0)
      ++first;
    if (first == rows)
      return false;
    swap_rows(p, first);

    Integer g, x, y, u, v;
    for (std::size_t r = p + 1; r < rows; ++r) {
      if (H[r][c] == 0)
        continue;
      const Integer a = H[p][c];
      const Integer b = H[r][c];
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      u = -b / g;
      v = a / g;
      for (std::size_t k = c; k < cols; ++k) {
        Integer ra = x * H[p][k] + y * H[r][k];
        Integer rb = u * H[p][k] + v * H[r][k];
        H[p][k] = std::move(ra);
        H[r][k] = std::move(rb);
      }
      sparse_combine(U[p], U[r], x, y, u, v);
    }
    return true;
  }

  void run(PivotRule rule)
  {
    const std::size_t rows = H.size();
    std::size_t p = 0;
    for (std::size_t c = 0; c < cols && p < rows; ++c) {
      bool found = rule == PivotRule::smallest_magnitude ? eliminate_smallest(p, c)
                                                        : eliminate_first(p, c);
      if (!found)
        continue;
      if (H[p][c] < 0)
        negate_row(p);
      Integer q;
      for (std::size_t r = 0; r < p; ++r) {
        if (H[r][c] == 0)
          continue;
        mpz_fdiv_q(q.get_mpz_t(), H[r][c].get_mpz_t(), H[p][c].get_mpz_t());
        if (q != 0)
          submul_row(r, q, p, c);
      }
      ++p;
    }
    rank = p;
  }
};

std::vector<Integer> densify(const SparseRow &row, std::size_t n)
{
  std::vector<Integer> out(n);
  for (const auto &[c, v] : row)
    out[c] = v;
  return out;
}

} // namespace

HermiteForm hnf(const IntegerMatrix &m, PivotRule rule)
{
  Elimination e(m);
  e.run(rule);

  HermiteForm result{IntegerMatrix(m.rows(), m.cols()), IntegerMatrix(m.rows(), m.rows()), e.rank};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::move(e.H[r].begin(), e.H[r].end(), result.H.row(r).begin());
    for (auto &[c, v] : e.U[r])
      result.U(r, c) = std::move(v);
  }
  return result;
}

LatticeBasis kernel_basis(const IntegerMatrix &m)
{
  Elimination e(m);
  e.run(PivotRule::smallest_magnitude);

  LatticeBasis lattice{m.rows(), {}};
  lattice.basis.reserve(m.rows() - e.rank);
  for (std::size_t r = e.rank; r < m.rows(); ++r)
    lattice.basis.push_back(densify(e.U[r], m.rows()));
  return lattice;
}

SmithForm snf(const IntegerMatrix &m)
{
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm f{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  IntegerMatrix &S = f.S;

  auto row_submul = [&](std::size_t target, const Integer &q, std::size_t source) {
    for (std::size_t j = 0; j < cols; ++j)
      mpz_submul(S(target, j).get_mpz_t(), q.get_mpz_t(), S(source, j).get_mpz_t());
    for (std::size_t j = 0; j < rows; ++j)
      mpz_submul(f.U(target, j).get_mpz_t(), q.get_mpz_t(), f.U(source, j).get_mpz_t());
  };
  auto col_submul = [&](std::size_t target, const Integer &q, std::size_t source) {
    for (std::size_t i = 0; i < rows; ++i)
      mpz_submul(S(i, target).get_mpz_t(), q.get_mpz_t(), S(i, source).get_mpz_t());
    for (std::size_t i = 0; i < cols; ++i)
      mpz_submul(f.V(i, target).get_mpz_t(), q.get_mpz_t(), f.V(i, source).get_mpz_t());
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols; ++j)
      std::swap(S(a, j), S(b, j));
    for (std::size_t j = 0; j < rows; ++j)
      std::swap(f.U(a, j), f.U(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows; ++i)
      std::swap(S(i, a), S(i, b));
    for (std::size_t i = 0; i < cols; ++i)
      std::swap(f.V(i, a), f.V(i, b));
  };

  Integer q;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (S(i, j) != 0 && (bi == rows || mpz_cmpabs(S(i, j).get_mpz_t(), S(bi, bj).get_mpz_t()) < 0)) {
            bi = i;
            bj = j;
          }
      if (bi == rows)
        return f;
      swap_rows(k, bi);
      swap_cols(k, bj);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (S(i, k) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), S(i, k).get_mpz_t(), S(k, k).get_mpz_t());
        row_submul(i, q, k);
        clean = clean && S(i, k) == 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (S(k, j) == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), S(k, j).get_mpz_t(), S(k, k).get_mpz_t());
        col_submul(j, q, k);
        clean = clean && S(k, j) == 0;
      }
      if (!clean)
        continue;

      // Divisibility chain: fold in any row whose entries the pivot misses.
      std::size_t offender = rows;
      for (std::size_t i = k + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (!divides(S(k, k), S(i, j))) {
            offender = i;
            break;
          }
      if (offender == rows)
        break;
      Integer minus_one = -1;
      row_submul(k, minus_one, offender);
    }
    if (S(k, k) < 0) {
      for (std::size_t j = 0; j < cols; ++j)
        S(k, j) = -S(k, j);
      for (std::size_t j = 0; j < rows; ++j)
        f.U(k, j) = -f.U(k, j);
    }
  }
  return f;
}

FunctionalGcd functional_gcd(const LatticeBasis &lattice, std::span<const Integer> w)
{
  if (w.size() != lattice.dimension)
    throw DomainError("functional length " + std::to_string(w.size()) +
                      " does not match lattice dimension " + std::to_string(lattice.dimension));

  FunctionalGcd result{0, std::vector<Integer>(lattice.basis.size())};
  Integer value, g, x, y;
  for (std::size_t i = 0; i < lattice.basis.size(); ++i) {
    const auto &b = lattice.basis[i];
    value = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b[k] != 0 && w[k] != 0)
        mpz_addmul(value.get_mpz_t(), b[k].get_mpz_t(), w[k].get_mpz_t());
    if (value == 0 || (result.g != 0 && divides(result.g, value)))
      continue;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), result.g.get_mpz_t(),
               value.get_mpz_t());
    if (x != 1)
      for (std::size_t k = 0; k < i; ++k)
        if (result.combiner[k] != 0)
          result.combiner[k] *= x;
    result.combiner[i] = y;
    result.g = g;
  }
  return result;
}

std::vector<Integer> combine_basis(const LatticeBasis &lattice, std::span<const Integer> lambda)
{
  if (lambda.size() != lattice.basis.size())
    throw DomainError("combiner length does not match basis size");
  std::vector<Integer> v(lattice.dimension);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0)
      continue;
    for (std::size_t k = 0; k < lattice.dimension; ++k)
      if (lattice.basis[i][k] != 0)
        mpz_addmul(v[k].get_mpz_t(), lambda[i].get_mpz_t(), lattice.basis[i][k].get_mpz_t());
  }
  return v;
}

} // namespace balidx
