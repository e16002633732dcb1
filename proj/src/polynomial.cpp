#include "balidx/polynomial.hpp"

#include "balidx/errors.hpp"

#include <algorithm>
#include <numeric>

namespace balidx {

Monomial Monomial::variable(std::size_t n, unsigned i)
{
  if (i < 1 || i > n)
    throw DomainError("variable x" + std::to_string(i) + " outside x1..x" + std::to_string(n));
  std::vector<unsigned> e(n, 0);
  e[i - 1] = 1;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const noexcept
{
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

std::size_t Monomial::variable_count() const noexcept
{
  return static_cast<std::size_t>(
      std::count_if(exponents_.begin(), exponents_.end(), [](unsigned e) { return e != 0; }));
}

bool Monomial::is_squarefree() const noexcept
{
  return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e <= 1; });
}

bool GrlexLess::operator()(const Monomial &a, const Monomial &b) const
{
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db)
    return da < db;
  return a.exponents() < b.exponents();
}

Polynomial Polynomial::monomial(const Monomial &m, const Integer &c)
{
  Polynomial f(m.nvars());
  f.add_term(m, c);
  return f;
}

Integer Polynomial::coefficient(const Monomial &m) const
{
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial &m, const Integer &c)
{
  if (m.nvars() != n_)
    throw DomainError("monomial has " + std::to_string(m.nvars()) + " exponents, expected " +
                      std::to_string(n_));
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

static void require_same_nvars(const Polynomial &a, const Polynomial &b)
{
  if (a.nvars() != b.nvars())
    throw DomainError("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                      std::to_string(b.nvars()));
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
  require_same_nvars(*this, other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
  require_same_nvars(*this, other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Integer &scalar)
{
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, c] : terms_)
    c *= scalar;
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
Polynomial operator*(const Integer &scalar, Polynomial f) { return f *= scalar; }

Monomial act(const Permutation &sigma, const Monomial &m)
{
  if (sigma.degree() != m.nvars())
    throw DomainError("permutation degree " + std::to_string(sigma.degree()) +
                      " does not match variable count " + std::to_string(m.nvars()));
  std::vector<unsigned> e(m.nvars());
  for (unsigned i = 1; i <= m.nvars(); ++i)
    e[sigma(i) - 1] = m[i - 1];
  return Monomial(std::move(e));
}

Polynomial act(const Permutation &sigma, const Polynomial &f)
{
  if (sigma.degree() != f.nvars())
    throw DomainError("permutation degree " + std::to_string(sigma.degree()) +
                      " does not match variable count " + std::to_string(f.nvars()));
  Polynomial g(f.nvars());
  for (const auto &[m, c] : f.terms())
    g.add_term(act(sigma, m), c);
  return g;
}

Polynomial combine(std::span<const std::pair<Integer, Polynomial>> parts)
{
  if (parts.empty())
    return Polynomial();
  Polynomial sum(parts.front().second.nvars());
  for (const auto &[scalar, f] : parts) {
    require_same_nvars(sum, f);
    for (const auto &[m, c] : f.terms())
      sum.add_term(m, scalar * c);
  }
  return sum;
}

Integer evaluate(const Polynomial &f, std::span<const Integer> point)
{
  if (point.size() != f.nvars())
    throw DomainError("evaluation point has wrong length");
  Integer total = 0;
  for (const auto &[m, c] : f.terms()) {
    Integer term = c;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (unsigned k = 0; k < m[i]; ++k)
        term *= point[i];
    total += term;
  }
  return total;
}

bool is_symmetric(const Polynomial &f)
{
  const std::size_t n = f.nvars();
  if (n < 2)
    return true;
  // (1 2) and (1 2 ... n) generate S_n.
  std::vector<unsigned> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1u);
  const Permutation swap = Permutation::from_cycles(n, {{1, 2}});
  const Permutation rotate = Permutation::from_cycles(n, {cycle});
  return act(swap, f) == f && act(rotate, f) == f;
}

Profile profile(const Polynomial &f)
{
  Profile p;
  for (const auto &[m, c] : f.terms()) {
    p.degree = std::max(p.degree.value_or(0), m.degree());
    p.squarefree = p.squarefree && m.is_squarefree();
    p.max_vars_per_term = std::max(p.max_vars_per_term, m.variable_count());
  }
  return p;
}

Monomial orbit_representative(const Monomial &m)
{
  std::vector<unsigned> e = m.exponents();
  std::sort(e.begin(), e.end());
  return Monomial(std::move(e));
}

std::set<Monomial, GrlexLess> orbit_monomials(const Polynomial &f)
{
  std::set<Monomial, GrlexLess> result;
  std::set<Monomial, GrlexLess> reps;
  for (const auto &[m, c] : f.terms())
    reps.insert(orbit_representative(m));
  for (const Monomial &rep : reps) {
    std::vector<unsigned> e = rep.exponents();
    do {
      result.insert(Monomial(e));
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return result;
}

Polynomial from_graph(std::size_t n, std::span<const std::pair<unsigned, unsigned>> edges)
{
  Polynomial f(n);
  for (auto [u, v] : edges) {
    if (u == v)
      throw DomainError("loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n)
      throw DomainError("edge " + std::to_string(u) + " " + std::to_string(v) +
                        " has a vertex outside 1.." + std::to_string(n));
    std::vector<unsigned> e(n, 0);
    e[u - 1] = e[v - 1] = 1;
    Monomial m(std::move(e));
    if (f.coefficient(m) != 0)
      throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    f.add_term(m, 1);
  }
  return f;
}

Polynomial from_hypergraph(std::size_t n, std::span<const std::vector<unsigned>> edges)
{
  Polynomial f(n);
  for (const auto &edge : edges) {
    if (edge.empty())
      throw DomainError("hypergraph edge must be nonempty");
    std::vector<unsigned> e(n, 0);
    for (unsigned v : edge) {
      if (v < 1 || v > n)
        throw DomainError("hyperedge vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(n));
      if (e[v - 1] != 0)
        throw DomainError("hyperedge repeats vertex " + std::to_string(v));
      e[v - 1] = 1;
    }
    f.add_term(Monomial(std::move(e)), 1);
  }
  return f;
}

Polynomial from_matrix(const IntegerMatrix &a)
{
  if (a.rows() != a.cols())
    throw DomainError("matrix must be square, got " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()));
  const std::size_t n = a.rows();
  Polynomial f(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<unsigned> e(n, 0);
      e[i] += 2;
      e[j] += 1;
      f.add_term(Monomial(std::move(e)), a(i, j));
    }
  return f;
}

} // namespace balidx
