#include "frobsyz/depth.hpp"

#include <random>

namespace frobsyz {

bool is_nonzerodivisor(const HomogeneousIdeal& i, const Polynomial& f) {
  if (f.is_zero()) return false;
  return ideal_quotient(i, HomogeneousIdeal(i.ring(), {f})) == i;
}

namespace {

std::vector<Polynomial> candidates(const RingPtr& ring, std::mt19937_64& rng, unsigned max_degree,
                                   unsigned random_tries) {
  std::vector<Polynomial> out;
  const auto n = ring->num_variables();
  for (std::size_t v = 0; v < n; ++v) out.push_back(Polynomial::variable(ring, v));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      out.push_back(Polynomial::variable(ring, a) + Polynomial::variable(ring, b));
    }
  }
  const auto p = ring->field().characteristic();
  for (unsigned d = 1; d <= max_degree; ++d) {
    const auto monos = ring->monomials_of_degree(d);
    for (unsigned t = 0; t < random_tries; ++t) {
      std::vector<Term> terms;
      for (const auto& m : monos) {
        const auto c = static_cast<Coeff>(rng() % p);
        if (c != 0) terms.push_back({m, c});
      }
      auto f = Polynomial::from_terms(ring, std::move(terms));
      if (!f.is_zero()) out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

DepthCertificate certify_depth(const HomogeneousIdeal& i, std::uint64_t seed, unsigned max_degree,
                               unsigned random_tries) {
  const auto& ring = i.ring();
  const auto m = HomogeneousIdeal::maximal(ring);
  std::mt19937_64 rng(seed);
  DepthCertificate cert;
  HomogeneousIdeal current = i;
  while (true) {
    if (current.is_unit()) {
      cert.exact = true;
      return cert;
    }
    if (!(ideal_quotient(current, m) == current)) {
      cert.exact = true;
      return cert;
    }
    bool extended = false;
    for (const auto& f : candidates(ring, rng, max_degree, random_tries)) {
      if (current.contains(f)) continue;
      if (is_nonzerodivisor(current, f)) {
        cert.sequence.push_back(f);
        current = current + HomogeneousIdeal(ring, {f});
        extended = true;
        break;
      }
    }
    if (!extended) return cert;
  }
}

std::optional<bool> is_cohen_macaulay(const HomogeneousIdeal& i, std::uint64_t seed) {
  const auto cert = certify_depth(i, seed);
  const int dim = krull_dimension(i);
  if (static_cast<int>(cert.sequence.size()) == dim) return true;
  if (cert.exact) return false;
  return std::nullopt;
}

}  // namespace frobsyz
