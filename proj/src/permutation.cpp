#include "balidx/permutation.hpp"

#include "balidx/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace balidx {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images))
{
  if (images_.empty())
    throw DomainError("permutation degree must be positive");

  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned x : images_) {
    if (x < 1 || x > images_.size() || seen[x])
      throw DomainError("not a permutation of {1.." + std::to_string(images_.size()) + "}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n)
{
  if (n == 0)
    throw DomainError("permutation degree must be positive");
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<unsigned>> &cycles)
{
  Permutation p = identity(n);
  std::vector<bool> used(n + 1, false);
  for (const auto &cycle : cycles) {
    for (unsigned x : cycle) {
      if (x < 1 || x > n)
        throw DomainError("cycle point " + std::to_string(x) + " outside {1.." +
                          std::to_string(n) + "}");
      if (used[x])
        throw DomainError("point " + std::to_string(x) + " repeated in cycle notation");
      used[x] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

std::vector<std::vector<unsigned>> Permutation::cycles() const
{
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> visited(degree() + 1, false);
  for (unsigned start = 1; start <= degree(); ++start) {
    if (visited[start] || (*this)(start) == start)
      continue;
    std::vector<unsigned> cycle;
    for (unsigned x = start; !visited[x]; x = (*this)(x)) {
      visited[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<unsigned> Permutation::moved_points() const
{
  std::vector<unsigned> points;
  for (unsigned i = 1; i <= degree(); ++i)
    if ((*this)(i) != i)
      points.push_back(i);
  return points;
}

bool Permutation::is_identity() const noexcept
{
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1)
      return false;
  return true;
}

bool Permutation::is_transposition() const noexcept
{
  return moved_points().size() == 2;
}

int Permutation::sign() const noexcept
{
  // (-1)^(n - number of cycles, fixed points included)
  std::size_t count = 0;
  std::vector<bool> visited(degree() + 1, false);
  for (unsigned start = 1; start <= degree(); ++start) {
    if (visited[start])
      continue;
    ++count;
    for (unsigned x = start; !visited[x]; x = (*this)(x))
      visited[x] = true;
  }
  return (degree() - count) % 2 == 0 ? 1 : -1;
}

Permutation Permutation::extended(std::size_t n) const
{
  if (n < degree())
    throw DomainError("cannot restrict a permutation of degree " + std::to_string(degree()) +
                      " to degree " + std::to_string(n));
  std::vector<unsigned> images = images_;
  for (std::size_t i = degree() + 1; i <= n; ++i)
    images.push_back(static_cast<unsigned>(i));
  return Permutation(std::move(images));
}

Permutation Permutation::shifted(unsigned offset, std::size_t n) const
{
  if (degree() + offset > n)
    throw DomainError("shifted permutation does not fit in degree " + std::to_string(n));
  Permutation p = identity(n);
  for (unsigned i = 1; i <= degree(); ++i)
    p.images_[i + offset - 1] = (*this)(i) + offset;
  return p;
}

static void require_same_degree(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw DomainError("permutation degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
}

Permutation compose(const Permutation &p, const Permutation &q)
{
  require_same_degree(p, q);
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 1; i <= p.degree(); ++i)
    images[i - 1] = p(q(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation &p)
{
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 1; i <= p.degree(); ++i)
    images[p(i) - 1] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation &p, const Permutation &g)
{
  require_same_degree(p, g);
  return compose(inverse(g), compose(p, g));
}

std::string GroupSpec::name() const
{
  switch (kind) {
  case Kind::symmetric:
    return "symmetric";
  case Kind::alternating:
    return "alternating";
  case Kind::generated:
    return "generated";
  }
  return "unknown";
}

std::vector<Permutation> enumerate(std::size_t n, const GroupSpec &group, std::size_t cap)
{
  if (n == 0)
    throw DomainError("group degree must be positive");
  if (n > cap)
    throw CapExceeded("degree " + std::to_string(n) + " exceeds enumeration cap " +
                      std::to_string(cap));

  if (group.kind == GroupSpec::Kind::generated) {
    for (const auto &g : group.generators)
      if (g.degree() != n)
        throw DomainError("generator degree " + std::to_string(g.degree()) +
                          " does not match group degree " + std::to_string(n));

    // Closure under right multiplication by generators; in a finite group
    // this also yields every inverse.
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto &p : frontier)
        for (const auto &g : group.generators) {
          Permutation q = compose(p, g);
          if (seen.insert(q).second)
            next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<Permutation> result;
  do {
    Permutation p(images);
    if (group.kind == GroupSpec::Kind::symmetric || p.is_even())
      result.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

} // namespace balidx
