#pragma once

#include "balidx/integer.hpp"
#include "balidx/permutation.hpp"
#include "balidx/polynomial.hpp"

#include <cstddef>
#include <map>
#include <set>

namespace balidx {

/// Element of Z[S_n]: a sparse integer combination of permutations.
class GroupRingElement {
public:
  using TermMap = std::map<Permutation, Integer>;

  GroupRingElement() = default;
  explicit GroupRingElement(std::size_t n) : n_(n) {}

  static GroupRingElement single(const Permutation &p, const Integer &c = 1);
  static GroupRingElement one(std::size_t n) { return single(Permutation::identity(n)); }

  std::size_t degree() const noexcept { return n_; }
  const TermMap &terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Permutation &p) const;
  void add_term(const Permutation &p, const Integer &c);

  GroupRingElement &operator+=(const GroupRingElement &other);
  GroupRingElement &operator-=(const GroupRingElement &other);
  GroupRingElement &operator*=(const Integer &scalar);

  /// Same element viewed in Z[S_m], m >= degree().
  GroupRingElement extended(std::size_t m) const;
  /// Relabels point i as i + offset inside Z[S_m].
  GroupRingElement shifted(unsigned offset, std::size_t m) const;

  friend bool operator==(const GroupRingElement &, const GroupRingElement &) = default;

private:
  std::size_t n_ = 0;
  TermMap terms_;
};

GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b);
GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b);
GroupRingElement operator*(const Integer &scalar, GroupRingElement a);

/// sum_sigma c_sigma * act(sigma, f)
Polynomial apply(const GroupRingElement &alpha, const Polynomial &f);

/// Convolution product; apply(multiply(a, b), f) == apply(a, apply(b, f)).
GroupRingElement multiply(const GroupRingElement &a, const GroupRingElement &b);

/// Sum of coefficients, alpha(1).
Integer augmentation(const GroupRingElement &alpha);

struct ParitySplit {
  GroupRingElement even; ///< part supported on A_n
  GroupRingElement odd;
};

ParitySplit parity_split(const GroupRingElement &alpha);

/// Points moved by some permutation with a nonzero coefficient.
std::set<unsigned> support(const GroupRingElement &alpha);

/// Transports alpha along conjugation by g: the coefficient of sigma lands
/// on g * sigma * g^-1, i.e. conjugate(sigma, inverse(g)). If apply(alpha, f)
/// is symmetric s, then apply(result, act(g, f)) == s.
GroupRingElement reindex_conjugate(const GroupRingElement &alpha, const Permutation &g);

} // namespace balidx
