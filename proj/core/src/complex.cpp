#include "frobsyz/complex.hpp"

#include "frobsyz/errors.hpp"

namespace frobsyz {

FreeComplex::FreeComplex(GradedFreeModule g0) : terms_{std::move(g0)} {}

FreeComplex::FreeComplex(std::vector<GradedMatrix> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw Error(ErrorKind::InvalidArgument, "complex needs at least one map");
  terms_.push_back(maps_.front().target());
  for (std::size_t j = 0; j < maps_.size(); ++j) {
    if (!(maps_[j].target() == terms_.back())) {
      throw Error(ErrorKind::InvalidArgument, "complex maps are not composable");
    }
    terms_.push_back(maps_[j].source());
  }
  for (std::size_t j = 1; j < maps_.size(); ++j) {
    if (!compose(maps_[j - 1], maps_[j]).is_zero()) {
      throw Error(ErrorKind::ComposesNonzero,
                  "maps " + std::to_string(j) + " and " + std::to_string(j + 1) +
                      " do not compose to zero");
    }
  }
}

GradedFreeModule FreeComplex::term(std::size_t j) const {
  if (j < terms_.size()) return terms_[j];
  return GradedFreeModule{ring(), {}};
}

GradedMatrix FreeComplex::map(std::size_t j) const {
  if (j == 0) throw Error(ErrorKind::InvalidArgument, "complex maps start at index 1");
  if (j <= maps_.size()) return maps_[j - 1];
  return GradedMatrix::zero(term(j), term(j - 1));
}

std::vector<std::uint32_t> FreeComplex::ranks() const {
  std::vector<std::uint32_t> out;
  for (const auto& t : terms_) out.push_back(t.rank());
  return out;
}

ModulePresentation PresentedComplex::term(std::size_t j) const {
  return ModulePresentation::from_relations(ring, covers.at(j).twists, relations.at(j));
}

PresentedComplex as_presented(const FreeComplex& g, std::size_t last) {
  PresentedComplex c;
  c.ring = g.ring();
  for (std::size_t j = 0; j <= last; ++j) {
    c.covers.push_back(g.term(j));
    c.relations.emplace_back();
    if (j >= 1) c.maps.push_back(g.map(j));
  }
  return c;
}

PresentedComplex tensor(const FreeComplex& g, const ModulePresentation& n, std::size_t last) {
  if (!same_ring(g.ring(), n.ring())) throw Error(ErrorKind::RingMismatch, "tensor: rings differ");
  const auto& ring = g.ring();
  const auto& u = n.generator_twists();
  const auto t = static_cast<std::uint32_t>(u.size());
  PresentedComplex c;
  c.ring = ring;
  for (std::size_t j = 0; j <= last; ++j) {
    const auto gj = g.term(j);
    std::vector<int> twists;
    for (const int ga : gj.twists) {
      for (const int ub : u) twists.push_back(ga + ub);
    }
    std::vector<FreeVector> rels;
    for (std::uint32_t a = 0; a < gj.rank(); ++a) {
      for (const auto& v : n.matrix().columns()) {
        FreeVector r;
        for (const auto& term : v.terms) r.terms.push_back({term.monomial, a * t + term.component, term.coeff});
        rels.push_back(std::move(r));
      }
    }
    c.covers.push_back(GradedFreeModule{ring, std::move(twists)});
    c.relations.push_back(std::move(rels));
  }
  for (std::size_t j = 1; j <= last; ++j) {
    const auto phi = g.map(j);
    std::vector<FreeVector> cols;
    for (std::uint32_t a = 0; a < phi.cols(); ++a) {
      for (std::uint32_t b = 0; b < t; ++b) {
        FreeVector col;
        for (const auto& term : phi.column(a).terms) {
          col.terms.push_back({term.monomial, term.component * t + b, term.coeff});
        }
        cols.push_back(std::move(col));
      }
    }
    c.maps.emplace_back(c.covers[j], c.covers[j - 1], std::move(cols));
  }
  return c;
}

}  // namespace frobsyz
