#include "helpers.hpp"

#include "balidx/errors.hpp"
#include "balidx/group_ring.hpp"
#include "balidx/null_design.hpp"

#include <doctest.h>

using namespace balidx;
using testing::cyc;
using testing::variable;

namespace {

Polynomial mono(std::vector<unsigned> e, long c = 1)
{
  return Polynomial::monomial(Monomial(std::move(e)), c);
}

std::vector<unsigned> unit_exponents(std::size_t n, std::initializer_list<unsigned> points)
{
  std::vector<unsigned> e(n, 0);
  for (unsigned p : points)
    e[p - 1] = 1;
  return e;
}

} // namespace

TEST_CASE("apply")
{
  // Symmetrizing the C5 polynomial with the stored element gives K5.
  Polynomial c5 = testing::fixture_polynomial("c5.graph");
  Polynomial k5 = apply(testing::fixture_element("c5-sym.groupring"), c5);
  CHECK(is_symmetric(k5));
  CHECK(k5.size() == 10);

  GroupRingElement gamma = builtin("gamma");
  CHECK(apply(gamma, variable(5, 1)) == variable(5, 1) - variable(5, 2));
  CHECK(apply(gamma, variable(5, 2)) == variable(5, 2) - variable(5, 1));
  for (unsigned i = 3; i <= 5; ++i)
    CHECK(apply(gamma, variable(5, i)).is_zero());

  CHECK(apply(GroupRingElement(3), mono({1, 2, 0})).is_zero());
  CHECK_THROWS_AS(apply(GroupRingElement::one(3), variable(4, 1)), DomainError);
}

TEST_CASE("gamma is even and its disjoint pair acts like a pod")
{
  GroupRingElement gamma = builtin("gamma");
  CHECK(parity_split(gamma).odd.is_zero());
  CHECK(augmentation(gamma) == 0);

  GroupRingElement pair = multiply(gamma.extended(10), gamma.shifted(5, 10));
  Polynomial expected = mono(unit_exponents(10, {1, 6})) - mono(unit_exponents(10, {1, 7})) -
                        mono(unit_exponents(10, {2, 6})) + mono(unit_exponents(10, {2, 7}));
  CHECK(apply(pair, mono(unit_exponents(10, {1, 6}))) == expected);
  CHECK(apply(pair, mono(unit_exponents(10, {1, 6}))) ==
        apply(make_element(10, {{1, "()"}, {-1, "(1 2)"}, {-1, "(6 7)"}, {1, "(1 2)(6 7)"}}),
              mono(unit_exponents(10, {1, 6}))));
}

TEST_CASE("multiply")
{
  std::mt19937_64 rng(20);
  GroupRingElement a = testing::random_element(rng, 4, 5);
  CHECK(multiply(GroupRingElement::one(4), a) == a);
  CHECK(multiply(a, GroupRingElement::one(4)) == a);

  GroupRingElement mu12 = make_element(4, {{1, "()"}, {-1, "(12)"}});
  GroupRingElement mu34 = make_element(4, {{1, "()"}, {-1, "(34)"}});
  CHECK(multiply(mu12, mu34) == make_element(4, {{1, "()"}, {-1, "(12)"}, {-1, "(34)"}, {1, "(12)(34)"}}));

  GroupRingElement mu56 = make_element(6, {{1, "()"}, {-1, "(56)"}});
  CHECK(multiply(multiply(mu12.extended(6), mu34.extended(6)), mu56) == testing::fixture_element("mu3.groupring"));
  CHECK_THROWS_AS(multiply(mu12, mu56), DomainError);
}

TEST_CASE("multiply is a homomorphism for apply and augmentation")
{
  std::mt19937_64 rng(21);
  for (int k = 0; k < 50; ++k) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 5));
    GroupRingElement a = testing::random_element(rng, n, 4);
    GroupRingElement b = testing::random_element(rng, n, 4);
    Polynomial f = testing::random_polynomial(rng, n, 3, 2);
    CHECK(apply(multiply(a, b), f) == apply(a, apply(b, f)));
    CHECK(augmentation(multiply(a, b)) == augmentation(a) * augmentation(b));

    std::set<unsigned> both = support(a);
    both.merge(support(b));
    for (unsigned p : support(multiply(a, b)))
      CHECK(both.count(p) == 1);
  }
}

TEST_CASE("augmentation")
{
  CHECK(augmentation(builtin("balC5")) == 6);
  CHECK(augmentation(testing::fixture_element("balC5.groupring")) == 6);
  CHECK(augmentation(testing::fixture_element("d-sym.groupring")) == 3);
  CHECK(augmentation(GroupRingElement(4)) == 0);
}

TEST_CASE("parity_split")
{
  ParitySplit t3 = parity_split(builtin("table3"));
  CHECK(augmentation(t3.even) == 1);
  CHECK(t3.even.size() == 7);
  CHECK(augmentation(t3.odd) == -1);

  CHECK(augmentation(parity_split(builtin("table2")).even) == 1);

  ParitySplit t1 = parity_split(builtin("table1"));
  CHECK(t1.even == make_element(4, {{1, "()"}, {1, "(123)"}, {1, "(132)"}}));
  CHECK(augmentation(t1.even) == 3);

  std::mt19937_64 rng(22);
  for (int k = 0; k < 50; ++k) {
    GroupRingElement a = testing::random_element(rng, 5, 6);
    ParitySplit s = parity_split(a);
    CHECK(s.even + s.odd == a);
    CHECK(augmentation(s.even) + augmentation(s.odd) == augmentation(a));
    for (const auto &[p, c] : s.even.terms())
      CHECK(p.is_even());
    for (const auto &[p, c] : s.odd.terms())
      CHECK(!p.is_even());
  }
}

TEST_CASE("support")
{
  CHECK(support(make_element(3, {{1, "()"}, {-1, "(1 2)"}})) == std::set<unsigned>{1, 2});
  CHECK(support(builtin("mu3")) == std::set<unsigned>{1, 2, 3, 4, 5, 6});
  CHECK(support(GroupRingElement::single(Permutation::identity(4), 7)).empty());
}

TEST_CASE("reindex_conjugate")
{
  std::mt19937_64 rng(23);
  GroupRingElement a = testing::random_element(rng, 4, 5);
  CHECK(reindex_conjugate(a, Permutation::identity(4)) == a);

  // The symmetric image is unchanged after relabeling f.
  const std::pair<const char *, const char *> cases[] = {
      {"c5.graph", "c5-sym.groupring"}, {"digraph-d.matrix", "d-sym.groupring"},
      {"bibd-h.hypergraph", "h-sym.groupring"}, {"c5.graph", "balC5.groupring"}};
  for (const auto &[poly, element] : cases) {
    Polynomial f = testing::fixture_polynomial(poly);
    GroupRingElement alpha = testing::fixture_element(element);
    Polynomial s = apply(alpha, f);
    REQUIRE(is_symmetric(s));
    for (int k = 0; k < 10; ++k) {
      Permutation g = testing::random_permutation(rng, f.nvars());
      GroupRingElement moved = reindex_conjugate(alpha, g);
      CHECK(apply(moved, act(g, f)) == s);
      CHECK(augmentation(moved) == augmentation(alpha));
      CHECK(augmentation(parity_split(moved).even) == augmentation(parity_split(alpha).even));
      CHECK(augmentation(parity_split(moved).odd) == augmentation(parity_split(alpha).odd));
    }
  }
}

TEST_CASE("extension and shifting")
{
  GroupRingElement a = make_element(3, {{2, "(12)"}, {-1, "(123)"}});
  CHECK(a.extended(5) == make_element(5, {{2, "(12)"}, {-1, "(123)"}}));
  CHECK(a.shifted(2, 5) == make_element(5, {{2, "(34)"}, {-1, "(345)"}}));
  CHECK_THROWS_AS(a.shifted(3, 5), DomainError);
}
