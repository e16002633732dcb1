#pragma once

#include "balidx/integer.hpp"
#include "balidx/lattice.hpp"
#include "balidx/permutation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace balidx {

/// Exponent vector; position i-1 holds the exponent of x_i.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<unsigned>(n, 0)); }
  /// x_i for a 1-based variable index.
  static Monomial variable(std::size_t n, unsigned i);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned> &exponents() const noexcept { return exponents_; }

  unsigned degree() const noexcept;
  std::size_t variable_count() const noexcept;
  bool is_squarefree() const noexcept;

  friend bool operator==(const Monomial &, const Monomial &) = default;

private:
  std::vector<unsigned> exponents_;
};

/// Graded lexicographic order: total degree first, then exponent vectors
/// lexicographically.
struct GrlexLess {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

class Polynomial {
public:
  using TermMap = std::map<Monomial, Integer, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial monomial(const Monomial &m, const Integer &c = 1);

  std::size_t nvars() const noexcept { return n_; }
  const TermMap &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial &m) const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial &m, const Integer &c);

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Integer &scalar);

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  std::size_t n_ = 0;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial &b);
Polynomial operator-(Polynomial a, const Polynomial &b);
Polynomial operator*(const Integer &scalar, Polynomial f);

/// sigma(f)(x_1..x_n) = f(x_sigma(1)..x_sigma(n)); x_i is sent to x_sigma(i).
Polynomial act(const Permutation &sigma, const Polynomial &f);
Monomial act(const Permutation &sigma, const Monomial &m);

Polynomial combine(std::span<const std::pair<Integer, Polynomial>> parts);

Integer evaluate(const Polynomial &f, std::span<const Integer> point);

bool is_symmetric(const Polynomial &f);

struct Profile {
  std::optional<unsigned> degree; ///< empty for the zero polynomial
  bool squarefree = true;
  std::size_t max_vars_per_term = 0;
};

Profile profile(const Polynomial &f);

/// Graded-lex smallest member of the S_n-orbit of m (exponents ascending).
Monomial orbit_representative(const Monomial &m);

/// Union of the S_n-orbits of the monomials of f.
std::set<Monomial, GrlexLess> orbit_monomials(const Polynomial &f);

/// Squarefree quadratic with one unit term per edge {u, v}.
Polynomial from_graph(std::size_t n, std::span<const std::pair<unsigned, unsigned>> edges);
/// Sum of the squarefree monomials of the edges.
Polynomial from_hypergraph(std::size_t n, std::span<const std::vector<unsigned>> edges);
/// sum_{i,j} A_ij x_i^2 x_j
Polynomial from_matrix(const IntegerMatrix &a);

} // namespace balidx
