#include "balidx/balance.hpp"

#include "balidx/errors.hpp"
#include "balidx/lattice.hpp"
#include "balidx/text_format.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace balidx {

namespace {

struct PolynomialLess {
  bool operator()(const Polynomial &a, const Polynomial &b) const
  {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto &x, const auto &y) {
          if (x.first != y.first)
            return GrlexLess{}(x.first, y.first);
          return x.second < y.second;
        });
  }
};

} // namespace

BalanceReport balancing_index(const Polynomial &f, const GroupSpec &group, std::size_t cap)
{
  if (f.is_zero())
    throw DomainError("balancing index of the zero polynomial is undefined");
  const std::size_t n = f.nvars();
  const std::vector<Permutation> elements = enumerate(n, group, cap);

  // Permutations with the same image of f are interchangeable: the all-ones
  // functional only sees the total coefficient on each class.
  std::map<Polynomial, std::size_t, PolynomialLess> class_of;
  std::vector<const Permutation *> representative;
  std::vector<Polynomial> images;
  for (const Permutation &sigma : elements) {
    Polynomial image = act(sigma, f);
    auto [it, inserted] = class_of.try_emplace(image, images.size());
    if (inserted) {
      representative.push_back(&sigma);
      images.push_back(std::move(image));
    }
  }

  // One column per non-representative orbit monomial m, holding
  // coeff(m) - coeff(rep(m)).
  std::vector<std::pair<Monomial, Monomial>> columns;
  for (const Monomial &m : orbit_monomials(f)) {
    Monomial rep = orbit_representative(m);
    if (!(rep == m))
      columns.emplace_back(m, std::move(rep));
  }

  IntegerMatrix constraints(images.size(), columns.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (std::size_t c = 0; c < columns.size(); ++c)
      constraints(k, c) =
          images[k].coefficient(columns[c].first) - images[k].coefficient(columns[c].second);

  const LatticeBasis kernel = kernel_basis(constraints);
  const std::vector<Integer> ones(images.size(), Integer(1));
  const FunctionalGcd fg = functional_gcd(kernel, ones);

  BalanceReport report{fg.g, group, std::nullopt, std::nullopt,
                       elements.size(), images.size(), columns.size()};
  if (fg.g != 0) {
    const std::vector<Integer> v = combine_basis(kernel, fg.combiner);
    GroupRingElement witness(n);
    for (std::size_t k = 0; k < v.size(); ++k)
      witness.add_term(*representative[k], v[k]);
    Polynomial image = apply(witness, f);
    if (augmentation(witness) != fg.g || !is_symmetric(image))
      throw std::logic_error("balancing witness failed re-verification");
    report.witness = std::move(witness);
    report.symmetric_image = std::move(image);
  }
  return report;
}

RatioReport ratio(const Polynomial &f, std::size_t cap)
{
  RatioReport r;
  r.bal = balancing_index(f, GroupSpec::symmetric(), cap).index;
  r.bal_alt = balancing_index(f, GroupSpec::alternating(), cap).index;
  if (r.bal_alt == 0)
    throw UndefinedRatio("ratio undefined: balancing index over the alternating group is 0");
  if (!divides(r.bal, r.bal_alt))
    throw std::logic_error("bal(f) does not divide bal(f, A_n)");
  r.ratio = r.bal_alt / r.bal;
  return r;
}

WitnessCheck verify_witness(const Polynomial &f, const GroupRingElement &alpha,
                            const GroupSpec &group, std::size_t cap)
{
  WitnessCheck check;
  check.augmentation = augmentation(alpha);
  if (alpha.degree() != f.nvars()) {
    check.reason = "degree mismatch between witness and polynomial";
    return check;
  }

  std::set<Permutation> members;
  if (group.kind == GroupSpec::Kind::generated) {
    auto all = enumerate(f.nvars(), group, cap);
    members.insert(all.begin(), all.end());
  }
  for (const auto &[sigma, c] : alpha.terms()) {
    bool inside = group.kind == GroupSpec::Kind::symmetric ||
                  (group.kind == GroupSpec::Kind::alternating && sigma.is_even()) ||
                  members.count(sigma) != 0;
    if (!inside) {
      check.reason = "permutation " + format_cycles(sigma) + " is not in the " + group.name() +
                     " group";
      return check;
    }
  }

  check.image = apply(alpha, f);
  if (!is_symmetric(*check.image)) {
    check.reason = "image is not symmetric";
    return check;
  }
  check.valid = true;
  return check;
}

bool SuiteReport::ok() const
{
  return std::all_of(classes.begin(), classes.end(),
                     [](const SuiteClassReport &c) { return c.violations.empty(); });
}

namespace {

class PolynomialSampler {
public:
  explicit PolynomialSampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Mostly unit coefficients: sparse 0/1 objects are where R(f) > 1 shows up.
  Integer coefficient()
  {
    if (uniform(0, 5) != 0)
      return 1;
    int c = uniform(1, 4);
    return uniform(0, 1) ? c : -c;
  }

  // A random d-uniform hypergraph, 1 <= d <= max_degree, with a few
  // non-unit weights mixed in.
  Polynomial squarefree(std::size_t n, unsigned max_degree)
  {
    for (;;) {
      const unsigned d = static_cast<unsigned>(uniform(1, static_cast<int>(max_degree)));
      const int density = uniform(1, 9);
      Polynomial f(n);
      std::vector<unsigned> e(n, 0);
      std::fill(e.end() - d, e.end(), 1u);
      do {
        if (uniform(0, 9) < density)
          f.add_term(Monomial(e), coefficient());
      } while (std::next_permutation(e.begin(), e.end()));
      if (!f.is_zero())
        return f;
    }
  }

  // Terms in at most two variables, exponents 1..3.
  Polynomial two_variable(std::size_t n)
  {
    Polynomial f(n);
    while (f.is_zero()) {
      int terms = uniform(1, 4);
      for (int k = 0; k < terms; ++k) {
        std::vector<unsigned> e(n, 0);
        unsigned i = static_cast<unsigned>(uniform(0, static_cast<int>(n) - 1));
        e[i] = static_cast<unsigned>(uniform(1, 3));
        if (uniform(0, 1)) {
          unsigned j = static_cast<unsigned>(uniform(0, static_cast<int>(n) - 1));
          if (j != i)
            e[j] = static_cast<unsigned>(uniform(1, 3));
        }
        f.add_term(Monomial(std::move(e)), coefficient());
      }
    }
    return f;
  }

  Polynomial matrix(std::size_t n)
  {
    for (;;) {
      IntegerMatrix a(n, n);
      const int density = uniform(1, 6);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          a(i, j) = uniform(0, 9) < density ? coefficient() : 0;
      Polynomial f = from_matrix(a);
      if (!f.is_zero())
        return f;
    }
  }

private:
  std::mt19937_64 rng_;
};

std::string describe(const Polynomial &f) { return serialize(make_document(f)); }

void run_class(SuiteClassReport &report, std::size_t trials,
               const std::function<Polynomial(std::size_t)> &draw,
               const std::function<bool(const Polynomial &, const Integer &)> &holds)
{
  for (std::size_t k = 0; k < trials; ++k) {
    Polynomial f = draw(k);
    ++report.trials;
    try {
      RatioReport r = ratio(f);
      ++report.ratio_counts[r.ratio.get_str()];
      if (holds(f, r.ratio))
        ++report.passed;
      else
        report.violations.push_back("R = " + r.ratio.get_str() + " for\n" + describe(f));
    } catch (const UndefinedRatio &) {
      ++report.skipped;
    }
  }
}

} // namespace

SuiteReport theorem_suite(std::uint64_t seed, std::size_t trials)
{
  if (trials == 0)
    throw DomainError("theorem suite needs at least one trial");
  SuiteReport suite{seed, {}};
  PolynomialSampler sample(seed);

  {
    SuiteClassReport c;
    c.name = "squarefree";
    c.claim = "R(f) divides 3 for squarefree f, n >= 3";
    run_class(
        c, trials, [&](std::size_t k) { return sample.squarefree(3 + k % 4, 3); },
        [](const Polynomial &, const Integer &r) { return divides(r, 3); });
    suite.classes.push_back(std::move(c));
  }
  {
    SuiteClassReport c;
    c.name = "squarefree-large-n";
    c.claim = "R(f) = 1 for squarefree f with n >= 2 deg(f) + 2";
    run_class(
        c, trials,
        [&](std::size_t k) { return k % 3 == 2 ? sample.squarefree(4, 1) : sample.squarefree(6, 2); },
        [](const Polynomial &, const Integer &r) { return r == 1; });
    suite.classes.push_back(std::move(c));
  }
  {
    SuiteClassReport c;
    c.name = "two-variable-n5";
    c.claim = "R(f) divides 6 for <= 2 variables per term, n = 5";
    run_class(
        c, trials,
        [&](std::size_t k) { return k % 2 == 0 ? sample.matrix(5) : sample.two_variable(5); },
        [](const Polynomial &, const Integer &r) { return divides(r, 6); });
    suite.classes.push_back(std::move(c));
  }
  {
    SuiteClassReport c;
    c.name = "two-variable-n6";
    c.claim = "R(f) divides 2 for <= 2 variables per term, n = 6";
    run_class(
        c, trials,
        [&](std::size_t k) { return k % 2 == 0 ? sample.matrix(6) : sample.two_variable(6); },
        [](const Polynomial &, const Integer &r) { return divides(r, 2); });
    suite.classes.push_back(std::move(c));
  }
  return suite;
}

} // namespace balidx
