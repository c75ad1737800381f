#include "frobsyz/hilbert.hpp"

#include <algorithm>
#include <bit>

#include "frobsyz/errors.hpp"

namespace frobsyz {

namespace {

bool in_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// Counts standard monomials of exact degree `remaining` in variables v..n-1
// on top of the prefix `m`. Pruned by prefix membership: if the prefix is
// already in the ideal, so is every extension.
std::uint64_t count_degree(const std::vector<Monomial>& gens, std::size_t n, std::size_t v,
                           Monomial& m, std::uint64_t remaining) {
  if (v + 1 == n) {
    m.set(v, static_cast<Monomial::Exponent>(remaining));
    const bool std = !in_ideal(gens, m);
    m.set(v, 0);
    return std ? 1 : 0;
  }
  std::uint64_t total = 0;
  for (std::uint64_t a = 0; a <= remaining; ++a) {
    m.set(v, static_cast<Monomial::Exponent>(a));
    if (in_ideal(gens, m)) break;
    total += count_degree(gens, n, v + 1, m, remaining - a);
  }
  m.set(v, 0);
  return total;
}

// Maximal size of a variable set containing the support of no generator.
int monomial_dimension(const std::vector<Monomial>& gens, std::size_t n) {
  if (in_ideal(gens, Monomial{})) return -1;
  int best = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t u = 0; u < limit; ++u) {
    const int size = std::popcount(u);
    if (size <= best) continue;
    const bool independent = std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      return (g.support() & ~u) == 0;
    });
    if (independent) best = size;
  }
  return best;
}

void enumerate_standard(const std::vector<Monomial>& gens, std::size_t n, std::size_t v,
                        Monomial& m, std::vector<Monomial>& out) {
  if (v == n) {
    out.push_back(m);
    return;
  }
  for (Monomial::Exponent a = 0;; ++a) {
    m.set(v, a);
    if (in_ideal(gens, m)) break;
    enumerate_standard(gens, n, v + 1, m, out);
  }
  m.set(v, 0);
}

std::uint64_t count_standard(const std::vector<Monomial>& gens, std::size_t n, std::size_t v,
                             Monomial& m) {
  if (v == n) return 1;
  std::uint64_t total = 0;
  for (Monomial::Exponent a = 0;; ++a) {
    m.set(v, a);
    if (in_ideal(gens, m)) break;
    total += count_standard(gens, n, v + 1, m);
  }
  m.set(v, 0);
  return total;
}

MonomialModule ideal_module(const HomogeneousIdeal& i) {
  return MonomialModule::from_basis(i.groebner());
}

}  // namespace

MonomialModule MonomialModule::from_basis(const GroebnerBasis& gb) {
  MonomialModule m;
  m.num_variables = gb.order().ring()->num_variables();
  m.components = gb.leading_monomials();
  m.twists = gb.order().twists();
  return m;
}

std::uint64_t hilbert_function(const MonomialModule& m, long long degree) {
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    const long long d = degree - m.twists[c];
    if (d < 0) continue;
    Monomial scratch;
    if (m.num_variables == 0) {
      total += (d == 0 && !in_ideal(m.components[c], scratch)) ? 1 : 0;
      continue;
    }
    total += count_degree(m.components[c], m.num_variables, 0, scratch,
                          static_cast<std::uint64_t>(d));
  }
  return total;
}

int krull_dimension(const MonomialModule& m) {
  int best = -1;
  for (const auto& gens : m.components) best = std::max(best, monomial_dimension(gens, m.num_variables));
  return best;
}

std::optional<std::uint64_t> standard_monomial_count(const MonomialModule& m) {
  if (krull_dimension(m) > 0) return std::nullopt;
  std::uint64_t total = 0;
  for (const auto& gens : m.components) {
    if (in_ideal(gens, Monomial{})) continue;
    Monomial scratch;
    total += count_standard(gens, m.num_variables, 0, scratch);
  }
  return total;
}

std::vector<Monomial> standard_monomials(const MonomialModule& m, std::uint32_t component) {
  const auto& gens = m.components.at(component);
  std::vector<Monomial> out;
  if (in_ideal(gens, Monomial{})) return out;
  if (monomial_dimension(gens, m.num_variables) > 0) {
    throw Error(ErrorKind::InfiniteLength, "standard monomials: component has positive dimension");
  }
  Monomial scratch;
  enumerate_standard(gens, m.num_variables, 0, scratch, out);
  return out;
}

std::uint64_t hilbert_function(const HomogeneousIdeal& i, long long degree) {
  return hilbert_function(ideal_module(i), degree);
}

int krull_dimension(const HomogeneousIdeal& i) { return krull_dimension(ideal_module(i)); }

std::uint64_t length_of_quotient(const HomogeneousIdeal& i) {
  const auto n = standard_monomial_count(ideal_module(i));
  if (!n) throw Error(ErrorKind::InfiniteLength, "quotient has positive Krull dimension");
  return *n;
}

std::vector<std::uint32_t> min_primes_monomial(const HomogeneousIdeal& i) {
  if (!i.is_monomial()) throw Error(ErrorKind::NotMonomial, "minimal primes need a monomial ideal");
  if (i.is_unit()) return {};
  std::vector<std::uint32_t> supports;
  for (const auto& g : i.groebner().elements()) supports.push_back(g.lead().monomial.support());
  const std::size_t n = i.ring()->num_variables();
  // Minimal vertex covers of the support hypergraph, visited by size so that
  // any cover containing an earlier one is skipped.
  std::vector<std::uint32_t> masks(1u << n);
  for (std::uint32_t u = 0; u < masks.size(); ++u) masks[u] = u;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<std::uint32_t> primes;
  for (const auto u : masks) {
    const bool covers = std::all_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & u) != 0; });
    if (!covers) continue;
    const bool minimal = std::none_of(primes.begin(), primes.end(),
                                      [&](std::uint32_t p) { return (p & ~u) == 0; });
    if (minimal) primes.push_back(u);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

HomogeneousIdeal radical_monomial(const HomogeneousIdeal& i) {
  if (!i.is_monomial()) throw Error(ErrorKind::NotMonomial, "radical needs a monomial ideal");
  std::vector<Monomial> gens;
  for (const auto& g : i.groebner().elements()) {
    Monomial r;
    const auto& m = g.lead().monomial;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (m[v] > 0) r.set(v, 1);
    }
    gens.push_back(r);
  }
  return HomogeneousIdeal::from_monomials(i.ring(), gens);
}

HomogeneousIdeal prime_from_mask(const RingPtr& ring, std::uint32_t mask) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < ring->num_variables(); ++v) {
    if (mask & (1u << v)) gens.push_back(Polynomial::variable(ring, v));
  }
  return HomogeneousIdeal(ring, std::move(gens));
}

}  // namespace frobsyz
