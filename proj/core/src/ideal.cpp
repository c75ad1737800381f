#include "frobsyz/ideal.hpp"

#include <string>

#include "frobsyz/errors.hpp"

namespace frobsyz {

namespace {

GroebnerBasis ideal_basis(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw Error(ErrorKind::RingMismatch, "ideal generator ring");
    if (!g.is_homogeneous()) {
      throw Error(ErrorKind::NonHomogeneous, "ideal generator not homogeneous: " + g.to_string());
    }
  }
  return buchberger(ring, gens);
}

}  // namespace

Polynomial to_polynomial(const RingPtr& ring, const FreeVector& v) {
  std::vector<Term> terms;
  terms.reserve(v.terms.size());
  for (const auto& t : v.terms) {
    if (t.component != 0) throw Error(ErrorKind::InvalidArgument, "vector is not rank one");
    terms.push_back({t.monomial, t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

HomogeneousIdeal::HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      generators_([&] {
        std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
        return std::move(generators);
      }()),
      gb_(ideal_basis(ring_, generators_)) {}

HomogeneousIdeal::HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> generators,
                                   GroebnerBasis gb)
    : ring_(std::move(ring)), generators_(std::move(generators)), gb_(std::move(gb)) {}

HomogeneousIdeal HomogeneousIdeal::from_certified_basis(
    RingPtr ring, std::vector<Polynomial> generators, const std::vector<Polynomial>& basis,
    const std::vector<std::vector<Polynomial>>& cofactors) {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorKind::EngineInconsistency, "stored basis rejected: " + what);
  };
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) fail("generator ring");
    if (!g.is_homogeneous()) fail("inhomogeneous generator");
  }
  const ModuleOrder order(ring, {0});
  std::vector<FreeVector> elements;
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), ring) || b.is_zero() || !b.is_homogeneous()) fail("basis element");
    if (b.leading_term().coeff != 1) fail("basis element not monic");
    elements.push_back(FreeVector::from_polynomial(b));
    order.normalize(elements.back());
  }
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k > 0 && order.compare(elements[k - 1].lead(), elements[k].lead()) <= 0) fail("order");
    for (std::size_t l = 0; l < elements.size(); ++l) {
      if (l == k) continue;
      const Monomial& lead = elements[l].lead().monomial;
      for (const auto& t : elements[k].terms) {
        if (lead.divides(t.monomial)) fail("basis not interreduced");
      }
    }
  }
  GroebnerBasis gb(order, std::move(elements), true);
  if (!gb.satisfies_buchberger_criterion()) fail("Buchberger criterion");
  for (const auto& g : generators) {
    if (!gb.reduces_to_zero(FreeVector::from_polynomial(g))) fail("generator not in span");
  }
  if (cofactors.size() != basis.size()) fail("cofactor count");
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (cofactors[k].size() != generators.size()) fail("cofactor width");
    Polynomial combo(ring);
    for (std::size_t l = 0; l < generators.size(); ++l) {
      if (!same_ring(cofactors[k][l].ring(), ring)) fail("cofactor ring");
      combo = combo + cofactors[k][l] * generators[l];
    }
    if (!(combo == basis[k])) fail("cofactor combination");
  }
  return HomogeneousIdeal(std::move(ring), std::move(generators), std::move(gb));
}

std::vector<std::vector<Polynomial>> basis_cofactors(const HomogeneousIdeal& ideal) {
  const auto& ring = ideal.ring();
  const auto& gens = ideal.generators();
  const auto& field = ring->field();
  std::vector<std::vector<Polynomial>> out;
  for (const auto& b : ideal.basis()) {
    // Kernel of (b, g_1, ..., g_t): some generator has a unit first entry.
    std::vector<FreeVector> columns{FreeVector::from_polynomial(b)};
    std::vector<int> twists{static_cast<int>(*b.homogeneous_degree())};
    for (const auto& g : gens) {
      columns.push_back(FreeVector::from_polynomial(g));
      twists.push_back(static_cast<int>(*g.homogeneous_degree()));
    }
    const std::vector<int> target{0};
    const auto kernel = kernel_modulo(ring, columns, twists, target, {});
    std::vector<Polynomial> row;
    for (const auto& k : kernel) {
      const Polynomial lead = k.entry(ring, 0);
      if (lead.is_zero() || !lead.is_constant()) continue;
      const Coeff scale = field.neg(field.inv(lead.leading_term().coeff));
      for (std::uint32_t l = 0; l < gens.size(); ++l) row.push_back(k.entry(ring, l + 1).scaled(scale));
      break;
    }
    if (row.size() != gens.size()) {
      throw Error(ErrorKind::EngineInconsistency, "basis element not expressed in generators");
    }
    out.push_back(std::move(row));
  }
  return out;
}

HomogeneousIdeal HomogeneousIdeal::zero(RingPtr ring) { return HomogeneousIdeal(ring, {}); }

HomogeneousIdeal HomogeneousIdeal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return HomogeneousIdeal(ring, {one});
}

HomogeneousIdeal HomogeneousIdeal::maximal(RingPtr ring) { return maximal_power(ring, 1); }

HomogeneousIdeal HomogeneousIdeal::maximal_power(RingPtr ring, unsigned k) {
  const auto monos = ring->monomials_of_degree(k);
  return from_monomials(ring, monos);
}

HomogeneousIdeal HomogeneousIdeal::from_monomials(RingPtr ring,
                                                  std::span<const Monomial> monomials) {
  std::vector<Polynomial> gens;
  gens.reserve(monomials.size());
  for (const auto& m : monomials) gens.push_back(Polynomial::monomial(ring, m));
  return HomogeneousIdeal(ring, std::move(gens));
}

std::vector<Polynomial> HomogeneousIdeal::basis() const {
  std::vector<Polynomial> out;
  out.reserve(gb_.size());
  for (const auto& v : gb_.elements()) out.push_back(to_polynomial(ring_, v));
  return out;
}

bool HomogeneousIdeal::is_unit() const noexcept {
  return gb_.size() == 1 && gb_.elements()[0].lead().monomial.is_one();
}

bool HomogeneousIdeal::is_monomial() const noexcept {
  for (const auto& v : gb_.elements()) {
    if (v.terms.size() != 1) return false;
  }
  return true;
}

Polynomial HomogeneousIdeal::reduce(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "reduce: ring mismatch");
  return to_polynomial(ring_, gb_.normal_form(FreeVector::from_polynomial(f)));
}

bool HomogeneousIdeal::contains(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "contains: ring mismatch");
  return gb_.reduces_to_zero(FreeVector::from_polynomial(f));
}

bool HomogeneousIdeal::contains(const HomogeneousIdeal& other) const {
  for (const auto& g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::string HomogeneousIdeal::to_string() const {
  std::string s = "(";
  const auto b = basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    s += b[i].to_string();
  }
  return s + ")";
}

HomogeneousIdeal operator+(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorKind::RingMismatch, "ideal sum");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return HomogeneousIdeal(a.ring(), std::move(gens));
}

HomogeneousIdeal operator*(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorKind::RingMismatch, "ideal product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return HomogeneousIdeal(a.ring(), std::move(gens));
}

HomogeneousIdeal ideal_quotient(const HomogeneousIdeal& i, const HomogeneousIdeal& j) {
  if (!same_ring(i.ring(), j.ring())) throw Error(ErrorKind::RingMismatch, "ideal quotient");
  const auto& ring = i.ring();
  const auto jb = j.basis();
  if (jb.empty()) return HomogeneousIdeal::unit(ring);

  FreeVector column;
  std::vector<int> target_twists;
  for (std::uint32_t c = 0; c < jb.size(); ++c) {
    for (const auto& t : jb[c].terms()) column.terms.push_back({t.monomial, c, t.coeff});
    target_twists.push_back(-static_cast<int>(*jb[c].homogeneous_degree()));
  }
  std::vector<FreeVector> relations;
  for (std::uint32_t c = 0; c < jb.size(); ++c) {
    for (const auto& g : i.groebner().elements()) {
      FreeVector r = g;
      for (auto& t : r.terms) t.component = c;
      relations.push_back(std::move(r));
    }
  }
  const std::vector<int> source_twists{0};
  const auto kernel = kernel_modulo(ring, std::span(&column, 1), source_twists, target_twists,
                                    relations);
  std::vector<Polynomial> gens;
  gens.reserve(kernel.size());
  for (const auto& k : kernel) gens.push_back(to_polynomial(ring, k));
  return HomogeneousIdeal(ring, std::move(gens));
}

HomogeneousIdeal saturation(const HomogeneousIdeal& i, const HomogeneousIdeal& j, int cap) {
  HomogeneousIdeal current = i;
  for (int step = 0; step < cap; ++step) {
    HomogeneousIdeal next = ideal_quotient(current, j);
    if (next == current) return current;
    current = std::move(next);
  }
  throw Error(ErrorKind::SaturationCap,
              "saturation did not stabilize within " + std::to_string(cap) + " quotients");
}

}  // namespace frobsyz
