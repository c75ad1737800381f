#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "frobsyz/module_presentation.hpp"
#include "frobsyz/parse_polynomial.hpp"

namespace frobsyz::testing {

RingPtr poly_ring(std::uint64_t p, std::vector<std::string> vars,
                  TermOrder order = TermOrder::GRevLex);
Polynomial poly(const RingPtr& ring, const std::string& text);
std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts);
HomogeneousIdeal ideal(const RingPtr& ring, std::initializer_list<const char*> gens);
QuotientRingPtr quotient(std::uint64_t p, std::vector<std::string> vars,
                         std::initializer_list<const char*> gens);

/// R/(gens) as a cyclic module.
ModulePresentation cyclic(const QuotientRingPtr& r, std::initializer_list<const char*> gens);
ModulePresentation residue_field(const QuotientRingPtr& r);
/// R/m^k.
ModulePresentation maximal_power_quotient(const QuotientRingPtr& r, unsigned k);

/// The running examples.
QuotientRingPtr e1_ring();        // F_2[x,y]/(x^2, xy)
QuotientRingPtr node_ring();      // F_2[x,y]/(xy)
QuotientRingPtr z_ring();         // F_2[x,y,z]/(z^2, zx, zy)
QuotientRingPtr plane(std::uint64_t p = 2);  // F_p[x,y]

}  // namespace frobsyz::testing
