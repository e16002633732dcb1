#include "helpers.hpp"

#include "balidx/errors.hpp"
#include "balidx/polynomial.hpp"

#include <doctest.h>

using namespace balidx;
using testing::cyc;
using testing::variable;

namespace {

Polynomial mono(std::vector<unsigned> e, long c = 1)
{
  return Polynomial::monomial(Monomial(std::move(e)), c);
}

// Coefficient constant on every S_n-orbit.
bool orbit_constant(const Polynomial &f)
{
  for (const Monomial &m : orbit_monomials(f)) {
    Integer c = f.coefficient(m);
    if (c != f.coefficient(orbit_representative(m)))
      return false;
  }
  return true;
}

std::vector<Integer> random_point(std::mt19937_64 &rng, std::size_t n)
{
  std::vector<Integer> point(n);
  for (auto &x : point)
    x = testing::uniform(rng, -5, 5);
  return point;
}

} // namespace

TEST_CASE("act on variables and the identity")
{
  CHECK(act(cyc("(1 2)", 2), variable(2, 1)) == variable(2, 2));
  std::mt19937_64 rng(4);
  Polynomial f = testing::random_polynomial(rng, 4, 5);
  CHECK(act(Permutation::identity(4), f) == f);
  CHECK_THROWS_AS(act(cyc("(1 2)", 3), f), DomainError);
}

TEST_CASE("act matches substitution x_i -> x_sigma(i)")
{
  // x1 x2^2 under (1 2 3): x2 x3^2
  CHECK(act(cyc("(1 2 3)", 3), mono({1, 2, 0})) == mono({0, 1, 2}));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    Permutation sigma = testing::random_permutation(rng, n);
    Polynomial f = testing::random_polynomial(rng, n, 4, 3);
    auto a = random_point(rng, n);
    std::vector<Integer> permuted(n);
    for (unsigned i = 1; i <= n; ++i)
      permuted[i - 1] = a[sigma(i) - 1];
    CHECK(evaluate(act(sigma, f), a) == evaluate(f, permuted));
  }
}

TEST_CASE("action axiom")
{
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 6));
    Permutation p = testing::random_permutation(rng, n);
    Permutation q = testing::random_permutation(rng, n);
    Polynomial f = testing::random_polynomial(rng, n, 4, 3);
    CHECK(act(compose(p, q), f) == act(p, act(q, f)));
  }
}

TEST_CASE("act preserves degree and the coefficient multiset")
{
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = testing::random_polynomial(rng, 5, 5, 3);
    Polynomial g = act(testing::random_permutation(rng, 5), f);
    CHECK(profile(g).degree == profile(f).degree);
    std::vector<Integer> a, b;
    for (const auto &[m, c] : f.terms())
      a.push_back(c);
    for (const auto &[m, c] : g.terms())
      b.push_back(c);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("combine")
{
  Polynomial x1 = variable(3, 1);
  std::vector<std::pair<Integer, Polynomial>> cancel{{1, x1}, {-1, x1}};
  CHECK(combine(cancel).is_zero());
  CHECK(combine(cancel).nvars() == 3);

  Polynomial x1x2 = mono({1, 1, 0});
  std::vector<std::pair<Integer, Polynomial>> sum{{2, x1x2}, {3, x1x2}};
  CHECK(combine(sum) == mono({1, 1, 0}, 5));

  std::vector<std::pair<Integer, Polynomial>> vars{{1, x1}, {1, variable(3, 2)}, {1, variable(3, 3)}};
  CHECK(is_symmetric(combine(vars)));

  std::vector<std::pair<Integer, Polynomial>> mixed{{1, x1}, {1, variable(2, 1)}};
  CHECK_THROWS_AS(combine(mixed), DomainError);
}

TEST_CASE("is_symmetric")
{
  CHECK(is_symmetric(variable(3, 1) + variable(3, 2) + variable(3, 3)));
  CHECK(!is_symmetric(mono({1, 2})));
  CHECK(is_symmetric(Polynomial(4)));
  for (long lambda : {1L, -2L, 7L}) {
    Polynomial kn(5);
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = i + 1; j < 5; ++j) {
        std::vector<unsigned> e(5, 0);
        e[i] = e[j] = 1;
        kn.add_term(Monomial(e), lambda);
      }
    CHECK(is_symmetric(kn));
  }
}

TEST_CASE("is_symmetric agrees with orbit-constant coefficients")
{
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    Polynomial f = testing::random_polynomial(rng, n, 3, 1);
    // Symmetrize about half the time.
    if (k % 2) {
      Polynomial s(n);
      for (const auto &sigma : enumerate(n, GroupSpec::symmetric()))
        s += act(sigma, f);
      f = s;
    }
    CHECK(is_symmetric(f) == orbit_constant(f));
  }
}

TEST_CASE("symmetrization over S_n is symmetric")
{
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    Polynomial f = testing::random_polynomial(rng, n, 4, 3);
    Polynomial s(n);
    for (const auto &sigma : enumerate(n, GroupSpec::symmetric()))
      s += act(sigma, f);
    CHECK(is_symmetric(s));
  }
}

TEST_CASE("profile")
{
  std::vector<std::pair<unsigned, unsigned>> c5{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  Profile p = profile(from_graph(5, c5));
  CHECK(p.degree == 2u);
  CHECK(p.squarefree);
  CHECK(p.max_vars_per_term == 2);

  Profile m = profile(from_matrix(IntegerMatrix{{1, 2}, {3, 0}}));
  CHECK(m.degree == 3u);
  CHECK(!m.squarefree);
  CHECK(m.max_vars_per_term <= 2);

  Profile q = profile(mono({1, 2, 3}));
  CHECK(q.degree == 6u);
  CHECK(!q.squarefree);
  CHECK(q.max_vars_per_term == 3);

  CHECK(!profile(Polynomial(3)).degree.has_value());
}

TEST_CASE("orbit_monomials")
{
  auto a = orbit_monomials(mono({1, 1, 0}));
  CHECK(a == std::set<Monomial, GrlexLess>{Monomial({0, 1, 1}), Monomial({1, 0, 1}), Monomial({1, 1, 0})});
  CHECK(orbit_monomials(mono({2, 1, 0})).size() == 6);
  CHECK(orbit_monomials(mono({1, 2, 3})).size() == 6);
  CHECK(orbit_representative(Monomial({3, 0, 1})) == Monomial({0, 1, 3}));

  std::mt19937_64 rng(10);
  for (int k = 0; k < 20; ++k) {
    Polynomial f = testing::random_polynomial(rng, 4, 3, 2);
    auto orbit = orbit_monomials(f);
    for (const auto &[m, c] : f.terms())
      CHECK(orbit.count(m) == 1);
    for (const auto &sigma : enumerate(4, GroupSpec::symmetric()))
      for (const Monomial &m : orbit)
        CHECK(orbit.count(act(sigma, m)) == 1);
  }
}

TEST_CASE("grlex order")
{
  GrlexLess less;
  CHECK(less(Monomial({0, 0, 1}), Monomial({0, 1, 1})));
  CHECK(less(Monomial({0, 1, 1}), Monomial({1, 0, 1})));
  CHECK(!less(Monomial({1, 0}), Monomial({1, 0})));
}

TEST_CASE("from_graph")
{
  std::vector<std::pair<unsigned, unsigned>> c5{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}};
  Polynomial f = from_graph(5, c5);
  CHECK(f.size() == 5);
  CHECK(f.coefficient(Monomial({1, 0, 0, 0, 1})) == 1);

  std::vector<std::pair<unsigned, unsigned>> p4{{1, 2}, {2, 3}, {3, 4}};
  CHECK(from_graph(4, p4).size() == 3);
  CHECK(from_graph(4, {}).is_zero());

  std::vector<std::pair<unsigned, unsigned>> loop{{2, 2}};
  std::vector<std::pair<unsigned, unsigned>> outside{{1, 6}};
  std::vector<std::pair<unsigned, unsigned>> twice{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(from_graph(5, loop), DomainError);
  CHECK_THROWS_AS(from_graph(5, outside), DomainError);
  CHECK_THROWS_AS(from_graph(5, twice), DomainError);
}

TEST_CASE("graph polynomials are squarefree quadratics")
{
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 2, 7));
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned u = 1; u <= n; ++u)
      for (unsigned v = u + 1; v <= n; ++v)
        if (testing::uniform(rng, 0, 1))
          edges.emplace_back(u, v);
    Profile p = profile(from_graph(n, edges));
    CHECK(p.degree.value_or(0) <= 2);
    CHECK(p.squarefree);
    CHECK(p.max_vars_per_term <= 2);
  }
}

TEST_CASE("from_hypergraph")
{
  Polynomial h = testing::fixture_polynomial("bibd-h.hypergraph");
  CHECK(h.size() == 10);
  Profile p = profile(h);
  CHECK(p.degree == 3u);
  CHECK(p.squarefree);

  std::vector<std::vector<unsigned>> single{{1, 2, 3}};
  CHECK(from_hypergraph(3, single) == mono({1, 1, 1}));
  std::vector<std::vector<unsigned>> points{{1}, {2}};
  CHECK(from_hypergraph(2, points) == variable(2, 1) + variable(2, 2));
  std::vector<std::vector<unsigned>> bad{{1, 7}};
  CHECK_THROWS_AS(from_hypergraph(6, bad), DomainError);
}

TEST_CASE("from_matrix")
{
  Polynomial m5 = testing::fixture_polynomial("m5.matrix");
  CHECK(m5.size() == 23);
  CHECK(m5.coefficient(Monomial({2, 0, 0, 1, 0})) == 4); // A_14 x1^2 x4
  CHECK(m5.coefficient(Monomial({3, 0, 0, 0, 0})) == 4); // A_11 x1^3

  CHECK(from_matrix(IntegerMatrix{{1, 0}, {0, 1}}) == mono({3, 0}) + mono({0, 3}));

  Polynomial d = testing::fixture_polynomial("digraph-d.matrix");
  CHECK(d == mono({2, 1, 0, 0}) + mono({1, 2, 0, 0}) + mono({1, 0, 0, 2}) + mono({2, 0, 1, 0}));

  CHECK(from_matrix(IntegerMatrix{{-2}}) == mono({3}, -2));
  CHECK_THROWS_AS(from_matrix(IntegerMatrix(2, 3)), DomainError);
}
