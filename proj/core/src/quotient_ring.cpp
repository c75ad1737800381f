#include "frobsyz/quotient_ring.hpp"

#include "frobsyz/errors.hpp"

namespace frobsyz {

QuotientRing::QuotientRing(HomogeneousIdeal ideal)
    : ambient_(ideal.ring()),
      ideal_(std::move(ideal)),
      maximal_(HomogeneousIdeal::maximal(ambient_)),
      torsion_(saturation(ideal_, maximal_)),
      dimension_(krull_dimension(ideal_)),
      depth_zero_(!(torsion_ == ideal_)) {}

std::shared_ptr<const QuotientRing> QuotientRing::make(HomogeneousIdeal defining_ideal) {
  if (defining_ideal.is_unit()) {
    throw Error(ErrorKind::InvalidArgument, "defining ideal must be proper");
  }
  return std::shared_ptr<const QuotientRing>(new QuotientRing(std::move(defining_ideal)));
}

std::shared_ptr<const QuotientRing> QuotientRing::polynomial(RingPtr ambient) {
  return make(HomogeneousIdeal::zero(std::move(ambient)));
}

FreeVector QuotientRing::reduce(FreeVector v) const {
  canonicalize(v, *ambient_);
  if (ideal_.is_zero() || v.is_zero()) return v;
  FreeVector out;
  std::size_t start = 0;
  while (start < v.terms.size()) {
    const std::uint32_t c = v.terms[start].component;
    std::size_t end = start;
    FreeVector part;
    while (end < v.terms.size() && v.terms[end].component == c) {
      part.terms.push_back({v.terms[end].monomial, 0, v.terms[end].coeff});
      ++end;
    }
    FreeVector nf = ideal_.groebner().normal_form(std::move(part));
    for (auto& t : nf.terms) out.terms.push_back({t.monomial, c, t.coeff});
    start = end;
  }
  return out;
}

HomogeneousIdeal QuotientRing::extend(const std::vector<Polynomial>& gens) const {
  return ideal_ + HomogeneousIdeal(ambient_, gens);
}

HomogeneousIdeal QuotientRing::extend(const HomogeneousIdeal& j) const { return ideal_ + j; }

std::vector<FreeVector> QuotientRing::relations(std::uint32_t rank) const {
  std::vector<FreeVector> out;
  out.reserve(rank * ideal_.groebner().size());
  for (std::uint32_t c = 0; c < rank; ++c) {
    for (const auto& g : ideal_.groebner().elements()) {
      FreeVector r;
      r.terms.reserve(g.terms.size());
      for (const auto& t : g.terms) r.terms.push_back({t.monomial, c, t.coeff});
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string QuotientRing::to_string() const {
  std::string s = "F_" + std::to_string(ambient_->field().characteristic()) + "[";
  const auto& vars = ambient_->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i];
  }
  s += "]";
  if (!ideal_.is_zero()) s += "/" + ideal_.to_string();
  return s;
}

}  // namespace frobsyz
