#include "frobsyz/frobenius.hpp"

#include <algorithm>

#include "frobsyz/depth.hpp"
#include "frobsyz/errors.hpp"
#include "frobsyz/homology.hpp"

namespace frobsyz {

HomogeneousIdeal bracket_power(const HomogeneousIdeal& i, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(i.generators().size());
  for (const auto& g : i.generators()) gens.push_back(frobenius_power(g, e));
  return HomogeneousIdeal(i.ring(), std::move(gens));
}

namespace {

GradedFreeModule scale_module(const GradedFreeModule& f, std::uint64_t q) {
  GradedFreeModule out{f.ring, {}};
  for (const int t : f.twists) out.twists.push_back(static_cast<int>(t * static_cast<long long>(q)));
  return out;
}

}  // namespace

GradedMatrix frobenius_matrix(const GradedMatrix& m, unsigned e) {
  if (e == 0) return m;
  const auto& ring = m.ring();
  const std::uint64_t q = frobenius_q(ring->ambient()->field().characteristic(), e);
  std::vector<FreeVector> cols;
  cols.reserve(m.cols());
  for (const auto& col : m.columns()) {
    FreeVector out;
    for (std::uint32_t r = 0; r < m.rows(); ++r) {
      const Polynomial entry = col.entry(ring->ambient(), r);
      if (entry.is_zero()) continue;
      const Polynomial power = frobenius_power(entry, e);
      for (const auto& t : power.terms()) out.terms.push_back({t.monomial, r, t.coeff});
    }
    cols.push_back(std::move(out));
  }
  return GradedMatrix(scale_module(m.source(), q), scale_module(m.target(), q), std::move(cols));
}

FreeComplex frobenius_complex(const FreeComplex& g, unsigned e) {
  if (e == 0) return g;
  if (g.length() == 0) {
    const std::uint64_t q = frobenius_q(g.ring()->ambient()->field().characteristic(), e);
    return FreeComplex(scale_module(g.term(0), q));
  }
  std::vector<GradedMatrix> maps;
  maps.reserve(g.length());
  for (const auto& m : g.maps()) maps.push_back(frobenius_matrix(m, e));
  try {
    return FreeComplex(std::move(maps));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::ComposesNonzero) {
      throw Error(ErrorKind::CompositionBroken,
                  "Frobenius image does not compose to zero: " + std::string(err.what()));
    }
    throw;
  }
}

unsigned default_e_max(std::uint32_t p) noexcept {
  if (p == 2) return 4;
  if (p == 3) return 3;
  return 2;
}

std::vector<std::vector<std::uint64_t>> frobenius_homology_lengths(const FreeComplex& g,
                                                                   std::size_t i_max,
                                                                   unsigned e_max) {
  std::vector<std::vector<std::uint64_t>> table(i_max + 1, std::vector<std::uint64_t>(e_max + 1));
  for (unsigned e = 0; e <= e_max; ++e) {
    const FreeComplex fe = frobenius_complex(g, e);
    for (std::size_t i = 0; i <= i_max; ++i) {
      const ModulePresentation h = homology(fe, i);
      if (!h.length()) {
        throw Error(ErrorKind::InfiniteLength,
                    "H_" + std::to_string(i) + "(F^" + std::to_string(e) +
                        ") has positive dimension");
      }
      table[i][e] = *h.length();
    }
  }
  return table;
}

std::vector<std::vector<std::uint64_t>> frobenius_homology_lengths(const ModulePresentation& m,
                                                                   std::size_t i_max,
                                                                   unsigned e_max) {
  if (!m.has_finite_length()) {
    throw Error(ErrorKind::InfiniteLength, "Frobenius homology needs a finite-length module");
  }
  const auto res = minimal_free_resolution(m, static_cast<int>(i_max) + 1);
  return frobenius_homology_lengths(res.complex, i_max, e_max);
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ExactZero: return "exact-zero";
    case Verdict::Decaying: return "decaying";
    case Verdict::Positive: return "positive";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict decide_verdict(const std::vector<FrobeniusSample>& samples, std::uint32_t p, int d) {
  std::vector<const FrobeniusSample*> used;
  for (const auto& s : samples) {
    if (s.e >= 1) used.push_back(&s);
  }
  if (used.empty()) return Verdict::Inconclusive;
  if (std::all_of(used.begin(), used.end(), [](const auto* s) { return s->length == 0; })) {
    return Verdict::ExactZero;
  }
  const std::size_t k = std::min<std::size_t>(3, used.size());
  const std::vector<const FrobeniusSample*> tail(used.end() - static_cast<long>(k), used.end());

  const Rational& last = used.back()->ratio;
  if (last > 0) {
    const Rational floor = last / 2;
    const bool bounded =
        std::all_of(used.begin(), used.end(), [&](const auto* s) { return s->ratio >= floor; });
    bool monotone = true;
    for (std::size_t t = 1; t < tail.size(); ++t) monotone = monotone && tail[t]->ratio >= tail[t - 1]->ratio;
    if (bounded && monotone) return Verdict::Positive;
  }
  if (std::all_of(tail.begin(), tail.end(), [](const auto* s) { return s->length > 0; })) {
    const BigInt first = tail.front()->length;
    const BigInt lastlen = tail.back()->length;
    const unsigned steps = tail.back()->e - tail.front()->e;
    const long long exponent = static_cast<long long>(steps) * (2LL * d - 1);
    bool slow;
    if (exponent >= 0) {
      slow = lastlen * lastlen <= big_pow(p, static_cast<unsigned>(exponent)) * first * first;
    } else {
      slow = lastlen * lastlen * big_pow(p, static_cast<unsigned>(-exponent)) <= first * first;
    }
    if (slow) return Verdict::Decaying;
  }
  return Verdict::Inconclusive;
}

FBettiEstimate make_estimate(std::size_t i, std::uint32_t p, int d,
                             const std::vector<std::uint64_t>& lengths) {
  FBettiEstimate est;
  est.i = i;
  est.p = p;
  est.d = d;
  for (unsigned e = 0; e < lengths.size(); ++e) {
    const BigInt denom = big_pow(p, e * static_cast<unsigned>(std::max(d, 0)));
    est.samples.push_back({e, lengths[e], Rational(BigInt(lengths[e]), denom)});
  }
  est.verdict = decide_verdict(est.samples, p, d);
  return est;
}

FBettiEstimate fbetti_estimate(const ModulePresentation& m, std::size_t i, unsigned e_max) {
  const auto table = frobenius_homology_lengths(m, i, e_max);
  return make_estimate(i, m.ring()->ambient()->field().characteristic(), m.ring()->dimension(),
                       table[i]);
}

VanishingReport vanishing_report(const ModulePresentation& m, std::size_t i_lo, std::size_t i_hi,
                                 unsigned e_max, std::uint64_t seed) {
  if (i_lo < 1 || i_hi < i_lo) throw Error(ErrorKind::InvalidArgument, "bad index window");
  if (!m.has_finite_length()) {
    throw Error(ErrorKind::InfiniteLength, "vanishing report needs a finite-length module");
  }
  const auto& ring = *m.ring();
  VanishingReport rep;
  rep.d = ring.dimension();
  rep.depth_zero = ring.depth_zero();
  rep.cohen_macaulay = rep.depth_zero && rep.d > 0 ? std::optional<bool>(false)
                                                   : is_cohen_macaulay(ring.ideal(), seed);
  rep.i_lo = i_lo;
  rep.i_hi = i_hi;
  rep.e_max = e_max;

  const auto res = minimal_free_resolution(m, static_cast<int>(i_hi) + 1);
  rep.finite_pd = res.terminated;
  rep.projective_dimension = res.projective_dimension();
  const auto table = frobenius_homology_lengths(res.complex, i_hi, e_max);
  const auto p = ring.ambient()->field().characteristic();
  for (std::size_t i = i_lo; i <= i_hi; ++i) rep.estimates.push_back(make_estimate(i, p, rep.d, table[i]));

  if (rep.finite_pd) {
    bool zero = true;
    for (std::size_t i = 1; i <= i_hi; ++i) {
      for (const auto v : table[i]) zero = zero && v == 0;
    }
    rep.acyclicity_holds = zero;
    rep.conclusion = zero ? "finite projective dimension; all sampled higher Frobenius homology vanishes"
                          : "finite projective dimension but nonzero higher Frobenius homology";
    return rep;
  }

  const auto windows_positive = [&](std::size_t width) -> std::optional<bool> {
    if (width == 0 || rep.estimates.size() < width) return std::nullopt;
    for (std::size_t s = 0; s + width <= rep.estimates.size(); ++s) {
      bool any = false;
      for (std::size_t t = s; t < s + width; ++t) any = any || rep.estimates[t].verdict == Verdict::Positive;
      if (!any) return false;
    }
    return true;
  };
  rep.windows_d_plus_one_positive = windows_positive(static_cast<std::size_t>(rep.d) + 1);
  if (rep.cohen_macaulay.value_or(false)) {
    rep.windows_d_positive = windows_positive(static_cast<std::size_t>(rep.d));
  }
  std::string c = "projective dimension not finite within the resolved range";
  if (rep.windows_d_plus_one_positive) {
    c += *rep.windows_d_plus_one_positive
             ? "; every window of d+1 indices has a positive estimate"
             : "; some window of d+1 indices has no positive estimate";
  }
  if (rep.windows_d_positive) {
    c += *rep.windows_d_positive ? "; every window of d indices has a positive estimate (CM)"
                                 : "; some window of d indices has no positive estimate (CM)";
  }
  rep.conclusion = c;
  return rep;
}

namespace {

void require_monomial(const QuotientRing& ring) {
  if (!ring.ideal().is_monomial()) {
    throw Error(ErrorKind::NotMonomial, "nilradical and minimal primes need a monomial defining ideal");
  }
}

LimitCheckReport limit_report(const FreeComplex& g, std::size_t i, unsigned e_max) {
  const auto& ring = *g.ring();
  const auto table = frobenius_homology_lengths(g, i, e_max);
  LimitCheckReport rep;
  rep.i = i;
  rep.estimate = make_estimate(i, ring.ambient()->field().characteristic(), ring.dimension(), table[i]);
  return rep;
}

}  // namespace

LimitCheckReport nilpotent_limit_check(const FreeComplex& g, std::size_t i, unsigned e_max) {
  const auto& ring = *g.ring();
  require_monomial(ring);
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "index must be >= 1");
  const HomogeneousIdeal nil = radical_monomial(ring.ideal());
  const GradedMatrix phi = g.map(i + 1);
  for (std::uint32_t c = 0; c < phi.cols(); ++c) {
    for (std::uint32_t r = 0; r < phi.rows(); ++r) {
      const Polynomial entry = phi.entry(r, c);
      if (!nil.contains(entry)) {
        throw Error(ErrorKind::HypothesisFails,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                        entry.to_string() + " is not nilpotent");
      }
    }
  }
  auto rep = limit_report(g, i, e_max);
  rep.consistent = rep.estimate.verdict == Verdict::ExactZero || rep.estimate.verdict == Verdict::Decaying;
  return rep;
}

LimitCheckReport minimal_prime_limit_check(const FreeComplex& g, std::size_t i, unsigned e_max) {
  const auto& ring = *g.ring();
  require_monomial(ring);
  if (ring.dimension() != 1) throw Error(ErrorKind::HypothesisFails, "ring is not one-dimensional");
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "index must be >= 1");
  const GradedMatrix phi = g.map(i + 1);
  std::optional<std::uint32_t> witness;
  for (const auto prime : min_primes_monomial(ring.ideal())) {
    const HomogeneousIdeal p = ring.extend(prime_from_mask(ring.ambient(), prime));
    bool inside = true;
    for (std::uint32_t c = 0; c < phi.cols() && inside; ++c) {
      for (std::uint32_t r = 0; r < phi.rows() && inside; ++r) inside = p.contains(phi.entry(r, c));
    }
    if (!inside) {
      witness = prime;
      break;
    }
  }
  if (!witness) {
    throw Error(ErrorKind::HypothesisFails, "image lies in p·G_i for every minimal prime p");
  }
  auto rep = limit_report(g, i, e_max);
  rep.prime = witness;
  rep.consistent = rep.estimate.verdict != Verdict::ExactZero && rep.estimate.verdict != Verdict::Decaying;
  return rep;
}

}  // namespace frobsyz
