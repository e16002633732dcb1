#pragma once

#include "balidx/group_ring.hpp"
#include "balidx/integer.hpp"
#include "balidx/permutation.hpp"
#include "balidx/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balidx {

// Degree cap for min_even_augmentation (one matrix row per element of S_n).
inline constexpr std::size_t kDefaultDesignCap = 7;

struct DesignFailure {
  std::vector<unsigned> subset; ///< A, ascending
  Monomial monomial;            ///< a surviving monomial of nu(m_A)
  Integer coefficient;          ///< its coefficient
};

struct DesignCheckReport {
  bool ordered = false;
  unsigned t = 0;
  bool verdict = false;
  std::optional<DesignFailure> first_failure;
};

/// The monomial prod_{i in A} x_i^{e_i}: e_i = 1 when unordered, otherwise
/// e_i = exponents[i-1] (default: e_i = i).
Monomial subset_monomial(std::size_t n, std::span<const unsigned> subset, bool ordered,
                         std::span<const unsigned> exponents = {});

/// Checks nu(m_A) == 0 for every A with |A| <= t, smallest subsets first in
/// lexicographic order, stopping at the first failure. With `ordered` the
/// test monomial uses distinct exponents per variable; `exponents` overrides
/// the default assignment x_i -> i and must be injective and positive.
/// Throws DomainError when t > n.
DesignCheckReport is_null(const GroupRingElement &nu, unsigned t, bool ordered,
                          std::span<const unsigned> exponents = {});

/// The product of two elements with disjoint supports. If mu is a null
/// s-design and nu a null t-design, the product is a null (s+t+1)-design.
GroupRingElement product_disjoint(const GroupRingElement &mu, const GroupRingElement &nu);

/// sum_{sigma in S_k} sgn(sigma) sigma inside Z[S_n], 3 <= k <= n.
GroupRingElement alt_sum(unsigned k, std::size_t n);

/// prod_{i=1..j} (() - (2i-1 2i)) inside Z[S_n], 2j <= n.
GroupRingElement pod(unsigned j, std::size_t n);

/// nu * (() - tau) for a transposition tau disjoint from support(nu).
GroupRingElement double_design(const GroupRingElement &nu, const Permutation &tau);

/// Stored elements: table1, table2, table3, gamma, balC5, mu3, c5-sym, h-sym,
/// d-sym, dprime-sym, d-alt-single-arc.
GroupRingElement builtin(std::string_view id);
std::vector<std::string_view> builtin_ids();

struct EvenAugmentation {
  Integer g;                 ///< generator of {nu_0(1) : nu null t-design}
  GroupRingElement witness;  ///< a null t-design with nu_0(1) == g
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Smallest positive even-part augmentation over all null (ordered)
/// t-designs in Z[S_n], with a witness. Throws CapExceeded when n > cap.
EvenAugmentation min_even_augmentation(std::size_t n, unsigned t, bool ordered,
                                       std::size_t cap = kDefaultDesignCap);

} // namespace balidx
