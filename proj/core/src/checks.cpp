#include "frobsyz/checks.hpp"

#include <algorithm>
#include <random>

#include "frobsyz/depth.hpp"
#include "frobsyz/errors.hpp"

namespace frobsyz {

std::string_view to_string(HypothesisStatus s) noexcept {
  switch (s) {
    case HypothesisStatus::Satisfied: return "satisfied";
    case HypothesisStatus::Failed: return "failed";
    case HypothesisStatus::Vacuous: return "vacuous";
  }
  return "failed";
}

std::string_view to_string(ConclusionStatus s) noexcept {
  switch (s) {
    case ConclusionStatus::Verified: return "verified";
    case ConclusionStatus::Refuted: return "refuted";
    case ConclusionStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

int independent_dimension(const ModulePresentation& m) {
  const auto& ring = *m.ring();
  const auto& s = *ring.ambient();
  const TermOrder other = s.order() == TermOrder::GRevLex ? TermOrder::Lex : TermOrder::GRevLex;
  const RingPtr t = PolyRing::make(s.field().characteristic(), s.variables(), other);
  const auto transfer = [&](const Polynomial& f) {
    return Polynomial::from_terms(t, std::vector<Term>(f.terms().begin(), f.terms().end()));
  };
  std::vector<Polynomial> gens;
  for (const auto& g : ring.ideal().generators()) gens.push_back(transfer(g));
  const auto r = QuotientRing::make(HomogeneousIdeal(t, std::move(gens)));
  std::vector<FreeVector> rels;
  for (const auto& col : m.matrix().columns()) {
    FreeVector v;
    for (std::uint32_t c = 0; c < m.num_generators(); ++c) {
      const auto part = FreeVector::from_polynomial(transfer(col.entry(ring.ambient(), c)), c);
      v.terms.insert(v.terms.end(), part.terms.begin(), part.terms.end());
    }
    rels.push_back(std::move(v));
  }
  return ModulePresentation::from_relations(r, m.generator_twists(), std::move(rels)).dimension();
}

bool ParameterChoice::certified() const {
  return system_of_parameters &&
         std::all_of(annihilator_is_h0.begin(), annihilator_is_h0.end(), [](bool b) { return b; });
}

ParameterChoice certify_parameters(const QuotientRingPtr& ring, std::vector<Polynomial> elements) {
  ParameterChoice out;
  for (const auto& x : elements) {
    if (!x.is_homogeneous() || x.is_zero()) {
      throw Error(ErrorKind::NonHomogeneous, "parameter " + x.to_string() + " is not a nonzero form");
    }
    out.degrees.push_back(*x.homogeneous_degree());
    out.annihilator_is_h0.push_back(annihilator_of(*ring, x) == ring->torsion_ideal());
  }
  out.system_of_parameters = static_cast<int>(elements.size()) == ring->dimension() &&
                             krull_dimension(ring->extend(elements)) == 0;
  out.elements = std::move(elements);
  return out;
}

namespace {

std::vector<Polynomial> parameter_search(const QuotientRingPtr& ring, unsigned n, unsigned tries,
                                         std::uint64_t seed, bool want_h0_annihilator) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "parameter degree must be >= 1");
  const auto& s = ring->ambient();
  const auto p = s->field().characteristic();
  const auto monos = s->monomials_of_degree(n);
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> chosen;
  HomogeneousIdeal current = ring->ideal();
  const int d = ring->dimension();
  for (int stage = 0; stage < d; ++stage) {
    const auto accept = [&](const Polynomial& f) {
      if (f.is_zero() || current.contains(f)) return false;
      if (krull_dimension(current + HomogeneousIdeal(s, {f})) != d - stage - 1) return false;
      return !want_h0_annihilator || annihilator_of(*ring, f) == ring->torsion_ideal();
    };
    std::optional<Polynomial> found;
    for (std::size_t v = 0; v < s->num_variables() && !found; ++v) {
      Monomial power;
      power.set(v, n);
      const auto f = Polynomial::monomial(s, power);
      if (accept(f)) found = f;
    }
    for (unsigned t = 0; t < tries && !found; ++t) {
      std::vector<Term> terms;
      for (const auto& mono : monos) {
        const auto c = static_cast<Coeff>(rng() % p);
        if (c != 0) terms.push_back({mono, c});
      }
      const auto f = Polynomial::from_terms(s, std::move(terms));
      if (accept(f)) found = f;
    }
    if (!found) {
      throw Error(ErrorKind::SearchExhausted,
                  "no degree-" + std::to_string(n) + " parameter found at stage " +
                      std::to_string(stage + 1) + " after " + std::to_string(tries) + " random tries");
    }
    current = current + HomogeneousIdeal(s, {*found});
    chosen.push_back(*found);
  }
  return chosen;
}

std::string describe(const ModulePresentation& m) {
  return "R = " + m.ring()->to_string() + "; M = " + m.to_string();
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::HypothesisFails, message);
}

void require_finite_length(const ModulePresentation& m) {
  require(m.has_finite_length(), "M must have finite length");
}

SyzygyRecord record(const ModulePresentation& syz, int index, std::string role) {
  return SyzygyRecord{index, syz.dimension(), syz.length(), std::move(role)};
}

GradedMatrix rechecked(const ModulePresentation& syz) {
  if (independent_dimension(syz) != syz.dimension()) {
    throw Error(ErrorKind::EngineInconsistency, "syzygy dimension differs between term orders");
  }
  return syz.matrix();
}

/// Conclusion for a check whose asserted records must have positive
/// dimension. A finite asserted syzygy is re-verified before it is reported.
void conclude_infinite(CheckResult& out, const MinimalResolution& res) {
  bool any_asserted = false;
  for (const auto& rec : out.syzygies) {
    if (rec.role != "asserted") continue;
    any_asserted = true;
    if (rec.dimension >= 1) continue;
    out.conclusion = ConclusionStatus::Refuted;
    out.refutation = rechecked(syzygy_module(res, rec.index));
    out.witnesses["refuted_index"] = std::to_string(rec.index);
    return;
  }
  if (!any_asserted) {
    out.hypothesis = HypothesisStatus::Vacuous;
    out.conclusion = ConclusionStatus::NotApplicable;
    return;
  }
  out.conclusion = ConclusionStatus::Verified;
}

HomogeneousIdeal maximal_power(const QuotientRing& ring, unsigned n) {
  return HomogeneousIdeal::maximal_power(ring.ambient(), n);
}

}  // namespace

ParameterChoice choose_parameters(const QuotientRingPtr& ring, unsigned n, unsigned tries,
                                  std::uint64_t seed) {
  return certify_parameters(ring, parameter_search(ring, n, tries, seed, true));
}

std::vector<Polynomial> find_system_of_parameters(const QuotientRingPtr& ring, unsigned n,
                                                  unsigned tries, std::uint64_t seed) {
  return parameter_search(ring, n, tries, seed, false);
}

GoodColength find_good_colength_ideal(const ModulePresentation& m, std::size_t i, unsigned n_cap) {
  require_finite_length(m);
  const auto& ring = m.ring();
  const auto res = minimal_free_resolution(m, static_cast<int>(i) + 2);
  const ModulePresentation syz = syzygy_module(res, static_cast<int>(i) + 1);
  require(syz.has_finite_length() && !syz.is_zero(),
          "Syz_" + std::to_string(i + 1) + " M is not of finite positive length");

  const auto tor_at = [&](unsigned n) {
    return tor_table(res, ModulePresentation::quotient(ring, maximal_power(*ring, n).basis()), i + 1);
  };
  GoodColength out;
  out.syzygy_length = syz.finite_length();
  TorTable current = tor_at(1);
  for (unsigned n = 1; n <= n_cap; ++n) {
    TorTable next = tor_at(n + 1);
    const bool kills = m.annihilated_by_maximal_power(n) && syz.annihilated_by_maximal_power(n);
    const std::int64_t s = sigma(current, i);
    const std::int64_t s_next = sigma(next, i);
    if (kills && current.lengths[i + 1] == 0 && s == s_next &&
        s == static_cast<std::int64_t>(out.syzygy_length)) {
      out.n = n;
      out.sigma = s;
      out.sigma_next = s_next;
      out.tor_next = current.lengths[i + 1];
      return out;
    }
    current = std::move(next);
  }
  throw Error(ErrorKind::CapExceeded,
              "no n <= " + std::to_string(n_cap) + " satisfies the colength conditions");
}

CheckResult check_big_socle(const ModulePresentation& m, int i_lo, int i_hi) {
  const auto& ring = m.ring();
  const int d = ring->dimension();
  require(d >= 1, "dim R must be >= 1");
  require(ring->depth_zero(), "depth R must be 0");
  require_finite_length(m);
  const SocleProfile profile = socle(ring);
  if (d == 1) {
    require(profile.l > profile.t, "d = 1 needs l > t");
  } else {
    require(profile.l >= profile.t, "d >= 2 needs l >= t");
  }
  if (i_lo < 1 || i_hi < i_lo) throw Error(ErrorKind::InvalidArgument, "bad index range");

  CheckResult out{"big-socle", describe(m), HypothesisStatus::Satisfied, ConclusionStatus::NotApplicable,
                  {}, {}, std::nullopt};
  out.witnesses["d"] = std::to_string(d);
  out.witnesses["l"] = std::to_string(profile.l);
  out.witnesses["t"] = std::to_string(profile.t);
  out.witnesses["h0_length"] = std::to_string(profile.h0.finite_length());
  const auto res = minimal_free_resolution(m, i_hi + 1);
  for (int i = i_lo; i <= i_hi; ++i) {
    out.syzygies.push_back(record(syzygy_module(res, i), i, i >= d + 2 ? "asserted" : "informational"));
  }
  conclude_infinite(out, res);
  return out;
}

CheckResult check_dim2_syzygies(const ModulePresentation& m) {
  require(m.ring()->dimension() == 2, "dim R must be 2");
  require_finite_length(m);
  CheckResult out{"dim2-syzygies", describe(m), HypothesisStatus::Satisfied,
                  ConclusionStatus::NotApplicable, {}, {}, std::nullopt};
  const auto res = minimal_free_resolution(m, 4);
  for (int i = 1; i <= 3; ++i) {
    const auto syz = syzygy_module(res, i);
    out.syzygies.push_back(record(syz, i, syz.is_zero() ? "vacuous" : "asserted"));
  }
  conclude_infinite(out, res);
  return out;
}

CheckResult check_bad_to_good(const ModulePresentation& m, BadToGoodMode mode, int i,
                              const std::vector<Polynomial>& j_gens) {
  const auto& ring = m.ring();
  const int d = ring->dimension();
  require(d >= 1 && d <= 2, "dim R must be 1 or 2");
  require(ring->depth_zero(), "depth R must be 0");
  require_finite_length(m);

  CheckResult out{"bad-to-good", describe(m), HypothesisStatus::Vacuous, ConclusionStatus::NotApplicable,
                  {}, {}, std::nullopt};
  ModulePresentation n = ModulePresentation::zero(ring);
  int k = 0;
  if (mode == BadToGoodMode::SyzygyOfQuotient) {
    require(i >= 3, "mode syzygy-of-quotient needs i >= 3");
    require(!j_gens.empty() && krull_dimension(ring->extend(j_gens)) == 0, "J must be m-primary");
    n = ModulePresentation::quotient(ring, j_gens);
    k = i;
    out.witnesses["mode"] = "syzygy-of-quotient";
    out.witnesses["high_power_clause"] = "unchecked";
  } else {
    require(i >= 4, "mode syzygy-of-h0 needs i >= 4");
    n = local_cohomology_h0(ring);
    k = i - 2;
    out.witnesses["mode"] = "syzygy-of-h0";
  }
  const auto hyp = syzygy_module(n, k);
  out.syzygies.push_back(record(hyp, k, "hypothesis"));
  out.witnesses["hypothesis_module"] = n.to_string();
  if (!hyp.has_finite_length()) return out;

  out.hypothesis = HypothesisStatus::Satisfied;
  const auto res = minimal_free_resolution(m, i + 2);
  out.syzygies.push_back(record(syzygy_module(res, i + 1), i + 1, "asserted"));
  conclude_infinite(out, res);
  return out;
}

CheckResult check_even_index(const ModulePresentation& m, const Polynomial& x, int i_max) {
  const auto& ring = m.ring();
  require(ring->dimension() == 1, "dim R must be 1");
  require_finite_length(m);
  require(annihilator_of(*ring, x) == ideal_quotient(ring->ideal(), ring->maximal()),
          "(0 : " + x.to_string() + ") differs from (0 : m)");
  if (i_max < 2) throw Error(ErrorKind::InvalidArgument, "i_max must be >= 2");

  CheckResult out{"even-index", describe(m), HypothesisStatus::Satisfied, ConclusionStatus::NotApplicable,
                  {}, {}, std::nullopt};
  out.witnesses["x"] = x.to_string();
  const auto res = minimal_free_resolution(m, i_max + 2);
  for (int k = 1; k <= i_max + 1; ++k) {
    const auto syz = syzygy_module(res, k);
    const bool in_scope = k >= 3 && (k - 1) % 2 == 0;
    std::string role = !in_scope ? "informational" : syz.is_zero() ? "vacuous" : "asserted";
    out.syzygies.push_back(record(syz, k, std::move(role)));
  }
  conclude_infinite(out, res);
  return out;
}

CheckResult check_syz5_parameter(const QuotientRingPtr& ring, const std::vector<Polynomial>& params,
                                 std::uint64_t seed) {
  const int d = ring->dimension();
  require(d >= 1 && d <= 2, "dim R must be 1 or 2");
  require(ring->depth_zero(), "depth R must be 0");
  const ParameterChoice choice = certify_parameters(ring, params);
  require(choice.system_of_parameters, "the elements are not a system of parameters");

  const auto m = ModulePresentation::quotient(ring, params);
  CheckResult out{"syz5-parameter", describe(m), HypothesisStatus::Satisfied,
                  ConclusionStatus::NotApplicable, {}, {}, std::nullopt};
  for (std::size_t j = 0; j < params.size(); ++j) {
    out.witnesses["x" + std::to_string(j + 1)] = params[j].to_string();
    out.witnesses["annihilator_is_h0_" + std::to_string(j + 1)] =
        choice.annihilator_is_h0[j] ? "true" : "false";
  }
  if (d == 2) {
    require(choice.certified(), "(0 : x_i) differs from H^0_m(R) for some i");
    const auto cm = is_cohen_macaulay(ring->torsion_ideal(), seed);
    require(cm.has_value(), "Cohen-Macaulay test for R/H^0 undecided");
    require(*cm, "R/H^0 is not Cohen-Macaulay");
    out.witnesses["quotient_by_h0_cohen_macaulay"] = "true";
  }
  const auto res = minimal_free_resolution(m, 6);
  for (int k = 1; k <= 5; ++k) {
    out.syzygies.push_back(record(syzygy_module(res, k), k, k == 5 ? "asserted" : "informational"));
  }
  conclude_infinite(out, res);
  return out;
}

CheckResult check_divide_identity(const ModulePresentation& m, int i) {
  const auto& ring = m.ring();
  const int d = ring->dimension();
  require(d >= 1 && d <= 2, "dim R must be 1 or 2");
  require(ring->depth_zero(), "depth R must be 0");
  require(i >= 2, "i must be >= 2");
  require_finite_length(m);

  CheckResult out{"divide-identity", describe(m), HypothesisStatus::Vacuous,
                  ConclusionStatus::NotApplicable, {}, {}, std::nullopt};
  const auto res = minimal_free_resolution(m, i + 2);
  const auto syz = syzygy_module(res, i + 1);
  out.syzygies.push_back(record(syz, i + 1, "hypothesis"));
  if (!syz.has_finite_length()) return out;

  out.hypothesis = HypothesisStatus::Satisfied;
  const auto tor = tor_table(res, local_cohomology_h0(ring), static_cast<std::size_t>(i - 2));
  const std::int64_t rhs = sigma(tor, static_cast<std::size_t>(i - 2));
  const auto lhs = static_cast<std::int64_t>(syz.finite_length());
  out.witnesses["syzygy_length"] = std::to_string(lhs);
  out.witnesses["sigma_h0"] = std::to_string(rhs);
  out.conclusion = lhs == rhs ? ConclusionStatus::Verified : ConclusionStatus::Refuted;
  if (lhs != rhs) out.refutation = rechecked(syz);
  return out;
}

CheckResult check_dim2_sigma(const ModulePresentation& m, int i, std::uint64_t seed) {
  const auto& ring = m.ring();
  require(ring->dimension() == 2, "dim R must be 2");
  require_finite_length(m);
  require(i >= 1, "i must be >= 1");

  CheckResult out{"dim2-sigma", describe(m), HypothesisStatus::Vacuous, ConclusionStatus::NotApplicable,
                  {}, {}, std::nullopt};
  const auto res = minimal_free_resolution(m, i + 2);
  const auto syz = syzygy_module(res, i + 1);
  out.syzygies.push_back(record(syz, i + 1, "hypothesis"));
  if (!syz.has_finite_length() || syz.is_zero()) return out;

  out.hypothesis = HypothesisStatus::Satisfied;
  const GoodColength good = find_good_colength_ideal(m, static_cast<std::size_t>(i));
  const ParameterChoice choice = choose_parameters(ring, good.n, 64, seed);
  const Polynomial& x2 = choice.elements.back();
  const auto s = sigma(tor_table(res, ModulePresentation::quotient(ring, {x2}), static_cast<std::size_t>(i)),
                       static_cast<std::size_t>(i));
  out.witnesses["n"] = std::to_string(good.n);
  out.witnesses["x2"] = x2.to_string();
  out.witnesses["sigma"] = std::to_string(s);
  out.witnesses["syzygy_length"] = std::to_string(syz.finite_length());
  const bool ok = s == static_cast<std::int64_t>(syz.finite_length());
  out.conclusion = ok ? ConclusionStatus::Verified : ConclusionStatus::Refuted;
  if (!ok) out.refutation = rechecked(syz);
  return out;
}

}  // namespace frobsyz
