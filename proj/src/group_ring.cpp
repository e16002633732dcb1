#include "balidx/group_ring.hpp"

#include "balidx/errors.hpp"

namespace balidx {

namespace {

void require_degree(std::size_t expected, std::size_t actual, const char *what)
{
  if (expected != actual)
    throw DomainError(std::string(what) + " degree mismatch: " + std::to_string(expected) +
                      " vs " + std::to_string(actual));
}

} // namespace

GroupRingElement GroupRingElement::single(const Permutation &p, const Integer &c)
{
  GroupRingElement a(p.degree());
  a.add_term(p, c);
  return a;
}

Integer GroupRingElement::coefficient(const Permutation &p) const
{
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupRingElement::add_term(const Permutation &p, const Integer &c)
{
  require_degree(n_, p.degree(), "group ring term");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

GroupRingElement &GroupRingElement::operator+=(const GroupRingElement &other)
{
  require_degree(n_, other.n_, "group ring sum");
  for (const auto &[p, c] : other.terms_)
    add_term(p, c);
  return *this;
}

GroupRingElement &GroupRingElement::operator-=(const GroupRingElement &other)
{
  require_degree(n_, other.n_, "group ring difference");
  for (const auto &[p, c] : other.terms_)
    add_term(p, -c);
  return *this;
}

GroupRingElement &GroupRingElement::operator*=(const Integer &scalar)
{
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[p, c] : terms_)
    c *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::extended(std::size_t m) const
{
  GroupRingElement out(m);
  for (const auto &[p, c] : terms_)
    out.add_term(p.extended(m), c);
  return out;
}

GroupRingElement GroupRingElement::shifted(unsigned offset, std::size_t m) const
{
  GroupRingElement out(m);
  for (const auto &[p, c] : terms_)
    out.add_term(p.shifted(offset, m), c);
  return out;
}

GroupRingElement operator+(GroupRingElement a, const GroupRingElement &b) { return a += b; }
GroupRingElement operator-(GroupRingElement a, const GroupRingElement &b) { return a -= b; }
GroupRingElement operator*(const Integer &scalar, GroupRingElement a) { return a *= scalar; }

Polynomial apply(const GroupRingElement &alpha, const Polynomial &f)
{
  require_degree(alpha.degree(), f.nvars(), "group ring action");
  Polynomial out(f.nvars());
  for (const auto &[sigma, c] : alpha.terms())
    for (const auto &[m, coeff] : f.terms())
      out.add_term(act(sigma, m), c * coeff);
  return out;
}

GroupRingElement multiply(const GroupRingElement &a, const GroupRingElement &b)
{
  require_degree(a.degree(), b.degree(), "group ring product");
  GroupRingElement out(a.degree());
  for (const auto &[p, c] : a.terms())
    for (const auto &[q, d] : b.terms())
      out.add_term(compose(p, q), c * d);
  return out;
}

Integer augmentation(const GroupRingElement &alpha)
{
  Integer total = 0;
  for (const auto &[p, c] : alpha.terms())
    total += c;
  return total;
}

ParitySplit parity_split(const GroupRingElement &alpha)
{
  ParitySplit split{GroupRingElement(alpha.degree()), GroupRingElement(alpha.degree())};
  for (const auto &[p, c] : alpha.terms())
    (p.is_even() ? split.even : split.odd).add_term(p, c);
  return split;
}

std::set<unsigned> support(const GroupRingElement &alpha)
{
  std::set<unsigned> points;
  for (const auto &[p, c] : alpha.terms())
    for (unsigned x : p.moved_points())
      points.insert(x);
  return points;
}

GroupRingElement reindex_conjugate(const GroupRingElement &alpha, const Permutation &g)
{
  require_degree(alpha.degree(), g.degree(), "conjugation");
  const Permutation g_inv = inverse(g);
  GroupRingElement out(alpha.degree());
  for (const auto &[sigma, c] : alpha.terms())
    out.add_term(conjugate(sigma, g_inv), c);
  return out;
}

} // namespace balidx
