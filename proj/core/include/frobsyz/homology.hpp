#pragma once

#include "frobsyz/complex.hpp"

namespace frobsyz {

/// H_i = ker(C_i -> C_{i-1}) / im(C_{i+1} -> C_i) as a presented module.
/// Kernel generators come from an elimination kernel of [f_i | U_{i-1}],
/// minimalized modulo U_i + im f_{i+1}; the relations are the kernel of
/// [K | U_i | f_{i+1}] restricted to the K coordinates. Throws
/// ComposesNonzero if f_i ∘ f_{i+1} does not land in U_{i-1}.
ModulePresentation homology(const PresentedComplex& c, std::size_t i);
ModulePresentation homology(const FreeComplex& g, std::size_t i);

}  // namespace frobsyz
