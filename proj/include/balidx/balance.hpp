#pragma once

#include "balidx/group_ring.hpp"
#include "balidx/integer.hpp"
#include "balidx/permutation.hpp"
#include "balidx/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace balidx {

/// Result of a balancing-index computation.
///
/// `index` is the nonnegative generator of the ideal
/// { alpha(1) : alpha in Z[group], alpha(f) symmetric }; zero means no such
/// alpha has a nonzero coefficient sum. When positive, `witness` attains it
/// and `symmetric_image` is apply(witness, f).
struct BalanceReport {
  Integer index;
  GroupSpec group;
  std::optional<GroupRingElement> witness;
  std::optional<Polynomial> symmetric_image;
  std::size_t group_order = 0;
  std::size_t classes = 0;     ///< distinct images sigma(f)
  std::size_t constraints = 0; ///< columns of the constraint matrix
};

BalanceReport balancing_index(const Polynomial &f, const GroupSpec &group,
                              std::size_t cap = kDefaultDegreeCap);

struct RatioReport {
  Integer bal;
  Integer bal_alt;
  Integer ratio; ///< bal_alt / bal
};

/// R(f) = bal(f, A_n) / bal(f). Throws UndefinedRatio when bal(f, A_n) = 0.
RatioReport ratio(const Polynomial &f, std::size_t cap = kDefaultDegreeCap);

struct WitnessCheck {
  bool valid = false;
  std::string reason; ///< empty when valid
  Integer augmentation;
  std::optional<Polynomial> image;
};

/// Certificate check: every carrier of alpha lies in the group and
/// apply(alpha, f) is symmetric.
WitnessCheck verify_witness(const Polynomial &f, const GroupRingElement &alpha,
                            const GroupSpec &group, std::size_t cap = kDefaultDegreeCap);

inline constexpr std::uint64_t kDefaultSuiteSeed = 20240531;

struct SuiteClassReport {
  std::string name;
  std::string claim;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0; ///< draws with bal(f, A_n) = 0
  std::map<std::string, std::size_t> ratio_counts; ///< R value -> draws
  std::vector<std::string> violations;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<SuiteClassReport> classes;

  bool ok() const;
};

/// Random polynomials from each theorem's hypothesis class, checking the
/// divisibility each theorem asserts for R(f).
SuiteReport theorem_suite(std::uint64_t seed = kDefaultSuiteSeed, std::size_t trials = 50);

} // namespace balidx
