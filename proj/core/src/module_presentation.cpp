#include "frobsyz/module_presentation.hpp"

#include "frobsyz/errors.hpp"

namespace frobsyz {

GroebnerBasis submodule_basis(const QuotientRing& ring, const std::vector<int>& twists,
                              const std::vector<FreeVector>& columns) {
  const ModuleOrder order(ring.ambient(), twists);
  GroebnerBuilder builder(order);
  for (const auto& c : columns) builder.add_generator(c);
  for (auto& r : ring.relations(static_cast<std::uint32_t>(twists.size()))) {
    builder.add_generator(std::move(r));
  }
  builder.complete();
  return builder.finish();
}

ModulePresentation::ModulePresentation(GradedMatrix presentation)
    : matrix_(std::move(presentation)),
      gb_(submodule_basis(*matrix_.ring(), matrix_.target().twists, matrix_.columns())) {
  const MonomialModule lead = MonomialModule::from_basis(gb_);
  dimension_ = krull_dimension(lead);
  if (dimension_ <= 0) length_ = standard_monomial_count(lead);
}

ModulePresentation ModulePresentation::from_relations(const QuotientRingPtr& ring,
                                                      std::vector<int> twists,
                                                      std::vector<FreeVector> relations) {
  std::vector<FreeVector> cols;
  std::vector<int> source;
  for (auto& r : relations) {
    r = ring->reduce(std::move(r));
    if (r.is_zero()) continue;
    source.push_back(static_cast<int>(vector_degree(r, twists)));
    cols.push_back(std::move(r));
  }
  GradedFreeModule target{ring, std::move(twists)};
  return ModulePresentation(
      GradedMatrix(GradedFreeModule{ring, std::move(source)}, std::move(target), std::move(cols)));
}

ModulePresentation ModulePresentation::quotient(const QuotientRingPtr& ring,
                                                const std::vector<Polynomial>& gens) {
  std::vector<FreeVector> rels;
  for (const auto& g : gens) rels.push_back(FreeVector::from_polynomial(g));
  return from_relations(ring, {0}, std::move(rels));
}

ModulePresentation ModulePresentation::free(const QuotientRingPtr& ring, std::vector<int> twists) {
  return from_relations(ring, std::move(twists), {});
}

ModulePresentation ModulePresentation::zero(const QuotientRingPtr& ring) {
  return from_relations(ring, {}, {});
}

std::uint64_t ModulePresentation::finite_length() const {
  if (!length_) throw Error(ErrorKind::InfiniteLength, "module has positive Krull dimension");
  return *length_;
}

std::uint64_t ModulePresentation::hilbert_function(long long degree) const {
  return frobsyz::hilbert_function(MonomialModule::from_basis(gb_), degree);
}

FreeVector ModulePresentation::reduce(FreeVector v) const {
  gb_.order().normalize(v);
  FreeVector nf = gb_.normal_form(std::move(v));
  canonicalize(nf, *ring()->ambient());
  return nf;
}

bool ModulePresentation::is_zero_element(FreeVector v) const { return gb_.contains(std::move(v)); }

bool ModulePresentation::annihilated_by_maximal_power(unsigned n) const {
  const auto monos = ring()->ambient()->monomials_of_degree(n);
  for (std::uint32_t c = 0; c < num_generators(); ++c) {
    for (const auto& m : monos) {
      if (!is_zero_element(FreeVector{{VecTerm{m, c, 1}}})) return false;
    }
  }
  return true;
}

std::string ModulePresentation::to_string() const {
  std::string s = "coker " + matrix_.to_string() + " twists";
  for (const int t : generator_twists()) s += " " + std::to_string(t);
  return s;
}

}  // namespace frobsyz
