#include "fixtures.hpp"

namespace frobsyz::testing {

RingPtr poly_ring(std::uint64_t p, std::vector<std::string> vars, TermOrder order) {
  return PolyRing::make(p, std::move(vars), order);
}

Polynomial poly(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(poly(ring, t));
  return out;
}

HomogeneousIdeal ideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  return HomogeneousIdeal(ring, polys(ring, gens));
}

QuotientRingPtr quotient(std::uint64_t p, std::vector<std::string> vars,
                         std::initializer_list<const char*> gens) {
  const auto ring = poly_ring(p, std::move(vars));
  return QuotientRing::make(ideal(ring, gens));
}

ModulePresentation cyclic(const QuotientRingPtr& r, std::initializer_list<const char*> gens) {
  return ModulePresentation::quotient(r, polys(r->ambient(), gens));
}

ModulePresentation residue_field(const QuotientRingPtr& r) {
  return ModulePresentation::quotient(r, r->maximal().generators());
}

ModulePresentation maximal_power_quotient(const QuotientRingPtr& r, unsigned k) {
  return ModulePresentation::quotient(
      r, HomogeneousIdeal::maximal_power(r->ambient(), k).generators());
}

QuotientRingPtr e1_ring() { return quotient(2, {"x", "y"}, {"x^2", "x*y"}); }
QuotientRingPtr node_ring() { return quotient(2, {"x", "y"}, {"x*y"}); }
QuotientRingPtr z_ring() { return quotient(2, {"x", "y", "z"}, {"z^2", "z*x", "z*y"}); }
QuotientRingPtr plane(std::uint64_t p) { return quotient(p, {"x", "y"}, {}); }

}  // namespace frobsyz::testing
