#include "frobsyz/homology.hpp"

#include "frobsyz/errors.hpp"
#include "frobsyz/resolution.hpp"

namespace frobsyz {

namespace {

std::vector<FreeVector> project(const std::vector<FreeVector>& vs, std::uint32_t keep,
                                const PolyRing& ring) {
  std::vector<FreeVector> out;
  for (const auto& v : vs) {
    FreeVector p;
    for (const auto& t : v.terms) {
      if (t.component < keep) p.terms.push_back(t);
    }
    canonicalize(p, ring);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ModulePresentation homology(const PresentedComplex& c, std::size_t i) {
  if (i > c.length()) return ModulePresentation::zero(c.ring);
  const auto& ring = *c.ring;
  const auto& poly = *ring.ambient();
  const GradedFreeModule& fi = c.covers[i];
  const auto ri = fi.rank();
  if (ri == 0) return ModulePresentation::zero(c.ring);

  // Image of f_{i+1} plus U_i.
  std::vector<FreeVector> boundary = c.relations[i];
  if (i + 1 <= c.length()) {
    const auto& next = c.maps[i];
    for (const auto& col : next.columns()) {
      if (!col.is_zero()) boundary.push_back(col);
    }
  }
  for (auto& b : boundary) b = ring.reduce(std::move(b));
  std::erase_if(boundary, [](const FreeVector& b) { return b.is_zero(); });

  // Cycles: preimage of U_{i-1} under f_i.
  std::vector<FreeVector> cycles;
  if (i == 0 || c.covers[i - 1].rank() == 0) {
    for (std::uint32_t a = 0; a < ri; ++a) cycles.push_back(FreeVector::unit(a));
  } else {
    const auto& fmap = c.maps[i - 1];
    const auto& prev = c.covers[i - 1];
    std::vector<FreeVector> columns = fmap.columns();
    std::vector<int> source = fi.twists;
    std::vector<FreeVector> prev_rel;
    for (const auto& u : c.relations[i - 1]) {
      FreeVector r = ring.reduce(u);
      if (r.is_zero()) continue;
      source.push_back(static_cast<int>(vector_degree(r, prev.twists)));
      prev_rel.push_back(r);
    }
    columns.insert(columns.end(), prev_rel.begin(), prev_rel.end());

    if (i + 1 <= c.length()) {
      const GroebnerBasis target = submodule_basis(ring, prev.twists, prev_rel);
      for (const auto& col : c.maps[i].columns()) {
        if (!target.contains(fmap.apply(col))) {
          throw Error(ErrorKind::ComposesNonzero,
                      "maps at position " + std::to_string(i) + " do not compose to zero");
        }
      }
    }
    const auto kernel =
        kernel_modulo(ring.ambient(), columns, source, prev.twists, ring.relations(prev.rank()));
    cycles = project(kernel, ri, poly);
  }

  auto gens = minimal_generators(ring, fi.twists, std::move(cycles), boundary);
  if (gens.empty()) return ModulePresentation::zero(c.ring);

  std::vector<int> gen_twists;
  for (const auto& g : gens) gen_twists.push_back(static_cast<int>(vector_degree(g, fi.twists)));
  std::vector<FreeVector> columns = gens;
  std::vector<int> source = gen_twists;
  for (const auto& b : boundary) {
    columns.push_back(b);
    source.push_back(static_cast<int>(vector_degree(b, fi.twists)));
  }
  const auto kernel = kernel_modulo(ring.ambient(), columns, source, fi.twists, ring.relations(ri));
  const auto k = static_cast<std::uint32_t>(gens.size());
  return ModulePresentation::from_relations(c.ring, std::move(gen_twists), project(kernel, k, poly));
}

ModulePresentation homology(const FreeComplex& g, std::size_t i) {
  return homology(as_presented(g, std::min(g.length(), i + 1)), i);
}

}  // namespace frobsyz
