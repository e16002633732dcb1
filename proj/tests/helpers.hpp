#pragma once

#include "balidx/group_ring.hpp"
#include "balidx/permutation.hpp"
#include "balidx/polynomial.hpp"
#include "balidx/text_format.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace testing {

inline std::string fixture(const std::string &name) { return std::string(BALIDX_FIXTURE_DIR) + "/" + name; }

inline balidx::Polynomial fixture_polynomial(const std::string &name)
{
  return balidx::to_polynomial(balidx::read_document(fixture(name)));
}

inline balidx::GroupRingElement fixture_element(const std::string &name)
{
  return std::get<balidx::GroupRingElement>(balidx::read_document(fixture(name)).payload);
}

inline balidx::Permutation cyc(std::string_view text, std::size_t n)
{
  return balidx::parse_cycles(text, n);
}

inline balidx::Permutation random_permutation(std::mt19937_64 &rng, std::size_t n)
{
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return balidx::Permutation(images);
}

inline int uniform(std::mt19937_64 &rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random polynomial with up to `terms` terms, exponents <= max_exp.
inline balidx::Polynomial random_polynomial(std::mt19937_64 &rng, std::size_t n, int terms,
                                            unsigned max_exp = 2)
{
  balidx::Polynomial f(n);
  while (f.is_zero()) {
    int count = uniform(rng, 1, terms);
    for (int k = 0; k < count; ++k) {
      std::vector<unsigned> e(n);
      for (auto &x : e)
        x = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_exp)));
      f.add_term(balidx::Monomial(e), uniform(rng, -3, 3));
    }
  }
  return f;
}

inline balidx::GroupRingElement random_element(std::mt19937_64 &rng, std::size_t n, int terms)
{
  balidx::GroupRingElement a(n);
  for (int k = 0; k < terms; ++k)
    a.add_term(random_permutation(rng, n), uniform(rng, -3, 3));
  return a;
}

inline balidx::Polynomial variable(std::size_t n, unsigned i)
{
  return balidx::Polynomial::monomial(balidx::Monomial::variable(n, i));
}

} // namespace testing
