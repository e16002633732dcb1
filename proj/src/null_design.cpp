#include "balidx/null_design.hpp"

#include "balidx/errors.hpp"
#include "balidx/lattice.hpp"
#include "balidx/text_format.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace balidx {

namespace {

// Calls visit(subset) for every k-subset of {1..n} in lexicographic order.
template <typename Visit>
bool for_each_subset(std::size_t n, unsigned k, Visit &&visit)
{
  std::vector<unsigned> subset(k);
  std::iota(subset.begin(), subset.end(), 1u);
  if (k > n)
    return true;
  for (;;) {
    if (!visit(std::as_const(subset)))
      return false;
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && subset[i] == n - k + i + 1)
      --i;
    if (i < 0)
      return true;
    ++subset[i];
    for (unsigned j = i + 1; j < k; ++j)
      subset[j] = subset[j - 1] + 1;
  }
}

void check_exponents(std::size_t n, std::span<const unsigned> exponents)
{
  if (exponents.empty())
    return;
  if (exponents.size() != n)
    throw DomainError("exponent assignment needs " + std::to_string(n) + " entries");
  std::set<unsigned> distinct(exponents.begin(), exponents.end());
  if (distinct.size() != n || distinct.count(0))
    throw DomainError("exponent assignment must be positive and injective");
}

} // namespace

Monomial subset_monomial(std::size_t n, std::span<const unsigned> subset, bool ordered,
                         std::span<const unsigned> exponents)
{
  std::vector<unsigned> e(n, 0);
  for (unsigned i : subset) {
    if (i < 1 || i > n)
      throw DomainError("subset point outside 1.." + std::to_string(n));
    e[i - 1] = !ordered ? 1 : exponents.empty() ? i : exponents[i - 1];
  }
  return Monomial(std::move(e));
}

DesignCheckReport is_null(const GroupRingElement &nu, unsigned t, bool ordered,
                          std::span<const unsigned> exponents)
{
  const std::size_t n = nu.degree();
  if (t > n)
    throw DomainError("design strength t = " + std::to_string(t) + " exceeds degree " +
                      std::to_string(n));
  check_exponents(n, exponents);

  DesignCheckReport report{ordered, t, true, std::nullopt};
  for (unsigned k = 0; k <= t && report.verdict; ++k) {
    for_each_subset(n, k, [&](const std::vector<unsigned> &subset) {
      Polynomial image = apply(nu, Polynomial::monomial(subset_monomial(n, subset, ordered, exponents)));
      if (image.is_zero())
        return true;
      const auto &[m, c] = *image.terms().begin();
      report.verdict = false;
      report.first_failure = DesignFailure{subset, m, c};
      return false;
    });
  }
  return report;
}

GroupRingElement product_disjoint(const GroupRingElement &mu, const GroupRingElement &nu)
{
  auto a = support(mu);
  auto b = support(nu);
  std::vector<unsigned> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty())
    throw DomainError("supports overlap at point " + std::to_string(common.front()));
  return multiply(mu, nu);
}

GroupRingElement alt_sum(unsigned k, std::size_t n)
{
  if (k < 3)
    throw DomainError("alt_sum needs k >= 3");
  if (k > n)
    throw DomainError("alt_sum needs k <= n");
  GroupRingElement nu(n);
  for (const Permutation &p : enumerate(k, GroupSpec::symmetric(), k))
    nu.add_term(p.extended(n), p.sign());
  return nu;
}

GroupRingElement pod(unsigned j, std::size_t n)
{
  if (j < 1)
    throw DomainError("pod needs at least one factor");
  if (2 * static_cast<std::size_t>(j) > n)
    throw DomainError("pod(" + std::to_string(j) + ") needs degree >= " + std::to_string(2 * j));
  GroupRingElement result = GroupRingElement::one(n);
  for (unsigned i = 1; i <= j; ++i) {
    GroupRingElement factor = GroupRingElement::one(n);
    factor.add_term(Permutation::from_cycles(n, {{2 * i - 1, 2 * i}}), -1);
    result = product_disjoint(result, factor);
  }
  return result;
}

GroupRingElement double_design(const GroupRingElement &nu, const Permutation &tau)
{
  if (!tau.is_transposition())
    throw DomainError("doubling needs a transposition, got " + format_cycles(tau));
  GroupRingElement factor = GroupRingElement::one(tau.degree());
  factor.add_term(tau, -1);
  return product_disjoint(nu, factor);
}

std::vector<std::string_view> builtin_ids()
{
  return {"table1", "table2", "table3", "gamma", "balC5", "mu3",
          "c5-sym", "h-sym", "d-sym", "dprime-sym", "d-alt-single-arc"};
}

GroupRingElement builtin(std::string_view id)
{
  if (id == "table1")
    return make_element(4, {{1, "()"}, {1, "(123)"}, {1, "(132)"},
                            {-1, "(12)"}, {-1, "(13)"}, {-1, "(23)"}});
  if (id == "table2")
    return make_element(4, {{1, "()"}, {1, "(123)"}, {1, "(1342)"},
                            {-1, "(12)"}, {-1, "(13)"}, {-1, "(234)"}});
  if (id == "table3")
    return make_element(6, {{1, "()"}, {1, "(1234)"}, {1, "(12)(345)"}, {1, "(123)(45)"},
                            {1, "(12435)"}, {1, "(34)(56)"}, {1, "(12)(56)"},
                            {-1, "(123)"}, {-1, "(12345)"}, {-1, "(124)(35)"}, {-1, "(34)"},
                            {-1, "(12)(45)"}, {-1, "(56)"}, {-1, "(12)(34)(56)"}});
  if (id == "gamma")
    return make_element(5, {{1, "()"}, {1, "(23)(45)"}, {-1, "(234)"}, {-1, "(243)"},
                            {1, "(24)(35)"}, {-1, "(12)(45)"}, {1, "(12)(34)"},
                            {-1, "(12)(35)"}});
  if (id == "balC5")
    return make_element(5, {{1, "()"}, {1, "(234)"}, {1, "(243)"}, {1, "(345)"},
                            {1, "(354)"}, {1, "(23)(45)"}});
  if (id == "mu3")
    return make_element(6, {{1, "()"}, {-1, "(12)"}, {-1, "(34)"}, {-1, "(56)"},
                            {1, "(12)(34)"}, {1, "(12)(56)"}, {1, "(34)(56)"},
                            {-1, "(12)(34)(56)"}});
  if (id == "c5-sym")
    return make_element(5, {{1, "()"}, {1, "(2354)"}});
  if (id == "h-sym")
    return make_element(6, {{1, "()"}, {1, "(14)(25)(36)"}});
  if (id == "d-sym")
    return make_element(4, {{1, "()"}, {-1, "(12)"}, {1, "(123)"}, {1, "(1234)"},
                            {1, "(1342)"}, {-1, "(134)"}, {1, "(14)(23)"}});
  if (id == "dprime-sym")
    return make_element(4, {{2, "()"}, {-3, "(12)"}, {-2, "(23)"}, {1, "(14)"},
                            {3, "(123)"}, {3, "(1342)"}, {-2, "(1423)"}, {1, "(1234)"}});
  if (id == "d-alt-single-arc")
    return make_element(4, {{1, "()"}, {-1, "(123)"}, {1, "(124)"}, {-1, "(142)"},
                            {-1, "(143)"}, {-1, "(234)"}, {1, "(243)"}, {1, "(12)(34)"},
                            {1, "(14)(23)"}});
  throw DomainError("unknown builtin '" + std::string(id) + "'");
}

EvenAugmentation min_even_augmentation(std::size_t n, unsigned t, bool ordered, std::size_t cap)
{
  if (n > cap)
    throw CapExceeded("degree " + std::to_string(n) + " exceeds design cap " + std::to_string(cap));
  if (t > n)
    throw DomainError("design strength t = " + std::to_string(t) + " exceeds degree " +
                      std::to_string(n));

  const std::vector<Permutation> group = enumerate(n, GroupSpec::symmetric(), cap);

  // Column (A, image of A): one per image set, or per image word if ordered.
  std::vector<std::vector<unsigned>> subsets;
  for (unsigned k = 0; k <= t; ++k)
    for_each_subset(n, k, [&](const std::vector<unsigned> &a) {
      subsets.push_back(a);
      return true;
    });

  std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> column;
  std::vector<std::vector<std::size_t>> hits(group.size());
  for (std::size_t r = 0; r < group.size(); ++r)
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      std::vector<unsigned> image;
      for (unsigned a : subsets[s])
        image.push_back(group[r](a));
      if (!ordered)
        std::sort(image.begin(), image.end());
      auto [it, inserted] = column.try_emplace({s, std::move(image)}, column.size());
      hits[r].push_back(it->second);
    }

  IntegerMatrix m(group.size(), column.size());
  for (std::size_t r = 0; r < group.size(); ++r)
    for (std::size_t c : hits[r])
      m(r, c) = 1;

  std::vector<Integer> even(group.size());
  for (std::size_t r = 0; r < group.size(); ++r)
    even[r] = group[r].is_even() ? 1 : 0;

  const LatticeBasis kernel = kernel_basis(m);
  const FunctionalGcd fg = functional_gcd(kernel, even);

  EvenAugmentation result{fg.g, GroupRingElement(n), m.rows(), m.cols()};
  if (fg.g != 0) {
    const std::vector<Integer> v = combine_basis(kernel, fg.combiner);
    for (std::size_t r = 0; r < group.size(); ++r)
      result.witness.add_term(group[r], v[r]);
    if (!is_null(result.witness, t, ordered).verdict ||
        augmentation(parity_split(result.witness).even) != fg.g)
      throw std::logic_error("min_even_augmentation witness failed re-verification");
  }
  return result;
}

} // namespace balidx
