#include "frobsyz/tor.hpp"

#include <algorithm>

#include "frobsyz/errors.hpp"
#include "frobsyz/homology.hpp"

namespace frobsyz {

ModulePresentation ideal_module(const QuotientRingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<FreeVector> candidates;
  for (const auto& g : gens) {
    const Polynomial r = ring->reduce(g);
    if (!r.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, "ideal generator " + g.to_string());
    if (!r.is_zero()) candidates.push_back(FreeVector::from_polynomial(r, 0));
  }
  const auto kept = minimal_generators(*ring, {0}, std::move(candidates));
  if (kept.empty()) return ModulePresentation::zero(ring);
  std::vector<int> twists;
  for (const auto& v : kept) twists.push_back(static_cast<int>(vector_degree(v, {0})));
  GradedMatrix row(GradedFreeModule{ring, twists}, GradedFreeModule{ring, {0}}, kept);
  return ModulePresentation(syzygy_matrix(row));
}

ModulePresentation local_cohomology_h0(const QuotientRingPtr& ring) {
  return ideal_module(ring, ring->torsion_ideal().basis());
}

SocleProfile socle(const QuotientRingPtr& ring) {
  const HomogeneousIdeal colon = ideal_quotient(ring->ideal(), ring->maximal());
  SocleProfile s{local_cohomology_h0(ring), ideal_module(ring, colon.basis())};
  const auto h0_len = static_cast<std::int64_t>(s.h0.finite_length());
  const auto soc_len = static_cast<std::int64_t>(s.soc.finite_length());
  s.t = h0_len - soc_len;
  s.l = soc_len;
  s.h0_is_vector_space = s.h0.is_vector_space();
  return s;
}

ModulePresentation quotient_by_ideal(const ModulePresentation& m, const std::vector<Polynomial>& gens) {
  std::vector<FreeVector> rels = m.matrix().columns();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (std::uint32_t c = 0; c < m.num_generators(); ++c) {
      rels.push_back(FreeVector::from_polynomial(g, c));
    }
  }
  return ModulePresentation::from_relations(m.ring(), m.generator_twists(), std::move(rels));
}

TorTable tor_table(const MinimalResolution& g, const ModulePresentation& n, std::size_t i) {
  if (!g.terminated && g.complex.length() < i + 1) {
    throw Error(ErrorKind::InvalidArgument, "resolution too short for Tor_" + std::to_string(i));
  }
  const PresentedComplex c = tensor(g.complex, n, i + 1);
  TorTable out;
  for (std::size_t j = 0; j <= i; ++j) {
    const ModulePresentation h = homology(c, j);
    if (!h.length()) {
      throw Error(ErrorKind::InfiniteLength, "Tor_" + std::to_string(j) + " has positive dimension");
    }
    out.lengths.push_back(*h.length());
  }
  return out;
}

TorTable tor_table(const ModulePresentation& m, const ModulePresentation& n, std::size_t i) {
  if (!m.has_finite_length()) {
    throw Error(ErrorKind::InfiniteLength, "Tor tables need a finite-length first argument");
  }
  return tor_table(minimal_free_resolution(m, static_cast<int>(i) + 1), n, i);
}

std::int64_t sigma(const TorTable& tor, std::size_t i) {
  if (tor.lengths.size() <= i) throw Error(ErrorKind::InvalidArgument, "Tor table too short for sigma");
  std::int64_t s = 0;
  for (std::size_t j = 0; j <= i; ++j) {
    const auto len = static_cast<std::int64_t>(tor.lengths[j]);
    s += ((i - j + 1) % 2 == 0) ? len : -len;
  }
  return s;
}

std::int64_t sigma(const ModulePresentation& m, const ModulePresentation& n, std::size_t i) {
  return sigma(tor_table(m, n, i), i);
}

EulerCheck euler_check(const PresentedComplex& c) {
  EulerCheck out;
  for (std::size_t j = 0; j <= c.length() && !c.covers.empty(); ++j) {
    const auto term = static_cast<std::int64_t>(c.term(j).finite_length());
    const auto h = static_cast<std::int64_t>(homology(c, j).finite_length());
    out.lhs += (j % 2 == 0) ? term : -term;
    out.rhs += (j % 2 == 0) ? h : -h;
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

HomogeneousIdeal annihilator_of(const QuotientRing& ring, const Polynomial& f) {
  return ideal_quotient(ring.ideal(), HomogeneousIdeal(ring.ambient(), {f}));
}

namespace {

IdentityRow make_row(std::string name, std::size_t j, std::vector<std::int64_t> values) {
  const bool holds = std::all_of(values.begin(), values.end(),
                                 [&](std::int64_t v) { return v == values.front(); });
  return IdentityRow{std::move(name), j, std::move(values), holds};
}

}  // namespace

LemmaAddReport lemma_add_check(const ModulePresentation& m, const Polynomial& y, std::size_t j_max) {
  const auto& ring = m.ring();
  if (!m.has_finite_length()) throw Error(ErrorKind::InfiniteLength, "lemma_add_check needs λ(M) < ∞");
  if (j_max < 1) throw Error(ErrorKind::InvalidArgument, "j_max must be >= 1");
  const HomogeneousIdeal& torsion = ring->torsion_ideal();
  if (!(annihilator_of(*ring, y) == torsion)) {
    throw Error(ErrorKind::HypothesisFails, "(0 : " + y.to_string() + ") differs from H^0_m(R)");
  }

  const std::vector<Polynomial> h0_gens = torsion.basis();
  const auto res = minimal_free_resolution(m, static_cast<int>(j_max) + 1);
  const TorTable by_quotient_y = tor_table(res, ModulePresentation::quotient(ring, {y}), j_max);
  const TorTable by_ideal_y = tor_table(res, ideal_module(ring, {y}), j_max);
  const TorTable by_quotient_h0 = tor_table(res, ModulePresentation::quotient(ring, h0_gens), j_max);
  const ModulePresentation h0 = local_cohomology_h0(ring);
  const TorTable by_h0 = tor_table(res, h0, j_max);

  const auto len = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
  const std::int64_t lambda_m = len(m.finite_length());
  const std::int64_t lambda_m_mod_h0 = len(quotient_by_ideal(m, h0_gens).finite_length());

  const std::int64_t lambda_m_mod_y = len(quotient_by_ideal(m, {y}).finite_length());

  LemmaAddReport report{y, h0.finite_length(), lambda_m_mod_y == lambda_m, {}, false};
  report.rows.push_back(make_row("tensor-ideal-y", 0, {len(by_ideal_y.lengths[0]), lambda_m_mod_h0}));
  if (report.y_kills_m) {
    report.rows.push_back(make_row("tor-quotient-y", 1,
                                   {len(by_quotient_y.lengths[1]), len(by_ideal_y.lengths[0]),
                                    lambda_m_mod_h0}));
  } else {
    // M ⊗ (y) -> M no longer vanishes; use the exact sequence instead.
    report.rows.push_back(make_row("tor-quotient-y", 1,
                                   {len(by_quotient_y.lengths[1]),
                                    len(by_ideal_y.lengths[0]) - lambda_m + lambda_m_mod_y}));
  }
  for (std::size_t j = 2; j <= j_max; ++j) {
    report.rows.push_back(make_row("tor-quotient-y", j,
                                   {len(by_quotient_y.lengths[j]), len(by_ideal_y.lengths[j - 1]),
                                    len(by_quotient_h0.lengths[j - 1])}));
  }
  report.rows.push_back(make_row("tor-quotient-h0", 1,
                                 {len(by_quotient_h0.lengths[1]),
                                  len(by_h0.lengths[0]) - lambda_m + lambda_m_mod_h0}));
  for (std::size_t j = 2; j <= j_max; ++j) {
    report.rows.push_back(make_row("tor-quotient-h0", j,
                                   {len(by_quotient_h0.lengths[j]), len(by_h0.lengths[j - 1])}));
  }
  report.holds = std::all_of(report.rows.begin(), report.rows.end(),
                             [](const IdentityRow& r) { return r.holds; });
  return report;
}

}  // namespace frobsyz
