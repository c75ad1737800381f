#include "frobsyz/free_vector.hpp"

#include <algorithm>

#include "frobsyz/errors.hpp"

namespace frobsyz {

FreeVector FreeVector::unit(std::uint32_t component) {
  return FreeVector{{VecTerm{Monomial{}, component, 1}}};
}

FreeVector FreeVector::from_polynomial(const Polynomial& f, std::uint32_t component) {
  FreeVector v;
  v.terms.reserve(f.size());
  for (const auto& t : f.terms()) v.terms.push_back({t.monomial, component, t.coeff});
  return v;
}

Polynomial FreeVector::entry(const RingPtr& ring, std::uint32_t component) const {
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (t.component == component) out.push_back({t.monomial, t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

std::uint32_t FreeVector::max_component() const noexcept {
  std::uint32_t m = 0;
  for (const auto& t : terms) m = std::max(m, t.component);
  return m;
}

void canonicalize(FreeVector& v, const PolyRing& ring) {
  const auto& field = ring.field();
  std::sort(v.terms.begin(), v.terms.end(), [&ring](const VecTerm& a, const VecTerm& b) {
    if (a.component != b.component) return a.component < b.component;
    return ring.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<VecTerm> merged;
  merged.reserve(v.terms.size());
  for (const auto& t : v.terms) {
    if (!merged.empty() && merged.back().component == t.component &&
        merged.back().monomial == t.monomial) {
      merged.back().coeff = field.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const VecTerm& t) { return t.coeff == 0; });
  v.terms = std::move(merged);
}

FreeVector make_vector(std::span<const Polynomial> entries) {
  FreeVector v;
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (const auto& t : entries[c].terms()) {
      v.terms.push_back({t.monomial, static_cast<std::uint32_t>(c), t.coeff});
    }
  }
  return v;
}

ModuleOrder::ModuleOrder(RingPtr ring, std::vector<int> twists, std::uint32_t elimination_block)
    : ring_(std::move(ring)), twists_(std::move(twists)), elim_(elimination_block) {
  if (elim_ > twists_.size()) {
    throw Error(ErrorKind::InvalidArgument, "elimination block larger than rank");
  }
}

void ModuleOrder::normalize(FreeVector& v) const {
  const auto& field = ring_->field();
  for (const auto& t : v.terms) {
    if (t.component >= twists_.size()) {
      throw Error(ErrorKind::InvalidArgument, "vector component outside the free module");
    }
  }
  std::sort(v.terms.begin(), v.terms.end(),
            [this](const VecTerm& a, const VecTerm& b) { return compare(a, b) > 0; });
  std::vector<VecTerm> merged;
  merged.reserve(v.terms.size());
  for (const auto& t : v.terms) {
    if (!merged.empty() && merged.back().component == t.component &&
        merged.back().monomial == t.monomial) {
      merged.back().coeff = field.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const VecTerm& t) { return t.coeff == 0; });
  v.terms = std::move(merged);
}

std::optional<long long> ModuleOrder::homogeneous_degree(const FreeVector& v) const {
  if (v.terms.empty()) return std::nullopt;
  const long long d = degree(v.terms.front());
  for (const auto& t : v.terms) {
    if (degree(t) != d) return std::nullopt;
  }
  return d;
}

FreeVector ModuleOrder::sub_multiple(std::span<const VecTerm> a, Coeff c, const Monomial& m,
                                     std::span<const VecTerm> b) const {
  const auto& field = ring_->field();
  const Coeff neg = field.neg(c);
  FreeVector out;
  out.terms.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const VecTerm bt{b[j].monomial * m, b[j].component, field.mul(b[j].coeff, neg)};
    const auto cmp = compare(a[i], bt);
    if (cmp > 0) {
      out.terms.push_back(a[i++]);
    } else if (cmp < 0) {
      out.terms.push_back(bt);
      ++j;
    } else {
      const Coeff s = field.add(a[i].coeff, bt.coeff);
      if (s != 0) out.terms.push_back({a[i].monomial, a[i].component, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.terms.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.terms.push_back({b[j].monomial * m, b[j].component, field.mul(b[j].coeff, neg)});
  }
  return out;
}

FreeVector ModuleOrder::add(const FreeVector& a, const FreeVector& b) const {
  return sub_multiple(a.terms, ring_->field().neg(1), Monomial{}, b.terms);
}

FreeVector ModuleOrder::scale(const FreeVector& a, Coeff c, const Monomial& m) const {
  const auto& field = ring_->field();
  FreeVector out;
  if (c % field.characteristic() == 0) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    out.terms.push_back({t.monomial * m, t.component, field.mul(t.coeff, c)});
  }
  return out;
}

}  // namespace frobsyz
