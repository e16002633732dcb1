#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace balidx {

// Degree cap for explicit group enumeration (8! = 40320 elements).
inline constexpr std::size_t kDefaultDegreeCap = 8;

/// A bijection of {1..n}, stored in one-line notation.
///
/// Composition is fixed by the action on polynomials: compose(p, q) maps
/// i to p(q(i)), so that act(compose(p, q), f) == act(p, act(q, f)) where
/// a permutation sends the variable x_i to x_{p(i)}.
class Permutation {
public:
  Permutation() = default;

  /// `images[i-1]` is the image of point i. Throws DomainError unless the
  /// sequence is a permutation of {1..n} with n >= 1.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(std::size_t n);

  /// Builds a permutation of degree n from disjoint cycles of 1-based points.
  /// Fixed points may appear as 1-cycles.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<unsigned>> &cycles);

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of the 1-based point i.
  unsigned operator()(unsigned i) const { return images_[i - 1]; }

  const std::vector<unsigned> &one_line() const noexcept { return images_; }

  /// Nontrivial cycles, each starting at its smallest point, ordered by
  /// that point.
  std::vector<std::vector<unsigned>> cycles() const;

  /// Points moved by the permutation, ascending.
  std::vector<unsigned> moved_points() const;

  bool is_identity() const noexcept;
  bool is_even() const noexcept { return sign() == 1; }
  bool is_transposition() const noexcept;
  int sign() const noexcept;

  /// The same permutation on {1..n} for n >= degree(), fixing the new points.
  Permutation extended(std::size_t n) const;

  /// Relabels every point i to i + offset inside a permutation of degree n.
  Permutation shifted(unsigned offset, std::size_t n) const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a,
                                          const Permutation &b) = default;

private:
  std::vector<unsigned> images_;
};

Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);
inline int sign(const Permutation &p) { return p.sign(); }

/// g^-1 * p * g under compose.
Permutation conjugate(const Permutation &p, const Permutation &g);

/// Group specification: S_n, A_n, or the subgroup generated by a list.
struct GroupSpec {
  enum class Kind { symmetric, alternating, generated };

  Kind kind = Kind::symmetric;
  std::vector<Permutation> generators;

  static GroupSpec symmetric() { return {Kind::symmetric, {}}; }
  static GroupSpec alternating() { return {Kind::alternating, {}}; }
  static GroupSpec generated(std::vector<Permutation> gens)
  {
    return {Kind::generated, std::move(gens)};
  }

  std::string name() const;
};

/// All elements of the group in lexicographic order of one-line notation.
/// Throws CapExceeded when n > cap and DomainError on degree mismatch.
std::vector<Permutation> enumerate(std::size_t n, const GroupSpec &group,
                                   std::size_t cap = kDefaultDegreeCap);

} // namespace balidx
