#include "frobsyz/groebner.hpp"

#include <algorithm>
#include <string>

#include "frobsyz/errors.hpp"

namespace frobsyz {

namespace {

void make_monic(FreeVector& v, const PrimeField& field) {
  if (v.terms.empty() || v.terms.front().coeff == 1) return;
  const Coeff inv = field.inv(v.terms.front().coeff);
  for (auto& t : v.terms) t.coeff = field.mul(t.coeff, inv);
}

std::span<const VecTerm> tail(const FreeVector& v) {
  return std::span<const VecTerm>(v.terms).subspan(1);
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(ModuleOrder order, std::vector<FreeVector> elements, bool reduced)
    : order_(std::move(order)), elements_(std::move(elements)), reduced_(reduced) {
  by_component_.resize(order_.rank());
  const auto& field = order_.ring()->field();
  std::erase_if(elements_, [](const FreeVector& v) { return v.is_zero(); });
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    make_monic(elements_[i], field);
    const auto c = elements_[i].lead().component;
    if (c >= order_.rank()) throw Error(ErrorKind::InvalidArgument, "basis element outside module");
    by_component_[c].push_back(i);
  }
}

const FreeVector* GroebnerBasis::find_reducer(const VecTerm& t) const {
  for (const auto idx : by_component_[t.component]) {
    if (elements_[idx].lead().monomial.divides(t.monomial)) return &elements_[idx];
  }
  return nullptr;
}

FreeVector GroebnerBasis::normal_form(FreeVector v) const {
  FreeVector result;
  std::size_t start = 0;
  while (start < v.terms.size()) {
    const VecTerm t = v.terms[start];
    if (const FreeVector* g = find_reducer(t)) {
      v = order_.sub_multiple(std::span<const VecTerm>(v.terms).subspan(start + 1), t.coeff,
                              t.monomial / g->lead().monomial, tail(*g));
      start = 0;
    } else {
      result.terms.push_back(t);
      ++start;
    }
  }
  return result;
}

bool GroebnerBasis::reduces_to_zero(FreeVector v) const {
  while (!v.is_zero()) {
    const VecTerm t = v.lead();
    const FreeVector* g = find_reducer(t);
    if (g == nullptr) return false;
    v = order_.sub_multiple(tail(v), t.coeff, t.monomial / g->lead().monomial, tail(*g));
  }
  return true;
}

bool GroebnerBasis::contains(FreeVector v) const {
  order_.normalize(v);
  return reduces_to_zero(std::move(v));
}

std::vector<std::vector<Monomial>> GroebnerBasis::leading_monomials() const {
  std::vector<std::vector<Monomial>> out(order_.rank());
  for (std::uint32_t c = 0; c < order_.rank(); ++c) {
    std::vector<Monomial> lms;
    for (const auto idx : by_component_[c]) lms.push_back(elements_[idx].lead().monomial);
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < lms.size(); ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < lms.size() && keep; ++j) {
        if (i == j) continue;
        if (lms[j].divides(lms[i]) && (!(lms[j] == lms[i]) || j < i)) keep = false;
      }
      if (keep) minimal.push_back(lms[i]);
    }
    out[c] = std::move(minimal);
  }
  return out;
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  for (std::uint32_t c = 0; c < order_.rank(); ++c) {
    const auto& idx = by_component_[c];
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const auto& f = elements_[idx[a]];
        const auto& g = elements_[idx[b]];
        const Monomial l = lcm(f.lead().monomial, g.lead().monomial);
        const FreeVector fs = order_.scale(FreeVector{{tail(f).begin(), tail(f).end()}}, 1,
                                           l / f.lead().monomial);
        FreeVector s = order_.sub_multiple(fs.terms, 1, l / g.lead().monomial, tail(g));
        if (!reduces_to_zero(std::move(s))) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// GroebnerBuilder

GroebnerBuilder::GroebnerBuilder(ModuleOrder order, std::size_t max_basis_size)
    : order_(std::move(order)), max_basis_size_(max_basis_size) {
  by_component_.resize(order_.rank());
}

void GroebnerBuilder::add_generator(FreeVector v) {
  order_.normalize(v);
  if (v.is_zero()) return;
  const auto d = order_.homogeneous_degree(v);
  if (!d) {
    throw Error(ErrorKind::NonHomogeneous,
                "Gröbner input is not homogeneous with respect to the module twists");
  }
  if (*d <= completed_degree_) completed_degree_ = *d - 1;
  pending_.emplace_back(*d, std::move(v));
}

bool GroebnerBuilder::is_complete() const noexcept { return pairs_.empty() && pending_.empty(); }

std::optional<long long> GroebnerBuilder::next_degree() const {
  std::optional<long long> d;
  for (const auto& p : pairs_) {
    if (!d || p.degree < *d) d = p.degree;
  }
  for (const auto& g : pending_) {
    if (!d || g.first < *d) d = g.first;
  }
  return d;
}

const FreeVector* GroebnerBuilder::find_reducer(const VecTerm& t) const {
  for (const auto idx : by_component_[t.component]) {
    if (basis_[idx].lead().monomial.divides(t.monomial)) return &basis_[idx];
  }
  return nullptr;
}

FreeVector GroebnerBuilder::top_reduce(FreeVector v) const {
  while (!v.is_zero()) {
    const VecTerm t = v.lead();
    const FreeVector* g = find_reducer(t);
    if (g == nullptr) break;
    v = order_.sub_multiple(tail(v), t.coeff, t.monomial / g->lead().monomial, tail(*g));
  }
  return v;
}

bool GroebnerBuilder::reduces_to_zero(FreeVector v) const {
  order_.normalize(v);
  return top_reduce(std::move(v)).is_zero();
}

FreeVector GroebnerBuilder::normal_form(FreeVector v) const {
  order_.normalize(v);
  FreeVector result;
  std::size_t start = 0;
  while (start < v.terms.size()) {
    const VecTerm t = v.terms[start];
    if (const FreeVector* g = find_reducer(t)) {
      v = order_.sub_multiple(std::span<const VecTerm>(v.terms).subspan(start + 1), t.coeff,
                              t.monomial / g->lead().monomial, tail(*g));
      start = 0;
    } else {
      result.terms.push_back(t);
      ++start;
    }
  }
  return result;
}

FreeVector GroebnerBuilder::s_polynomial(const Pair& pair) const {
  const auto& f = basis_[pair.i];
  const auto& g = basis_[pair.j];
  const FreeVector fs =
      order_.scale(FreeVector{{tail(f).begin(), tail(f).end()}}, 1, pair.lcm / f.lead().monomial);
  return order_.sub_multiple(fs.terms, 1, pair.lcm / g.lead().monomial, tail(g));
}

void GroebnerBuilder::insert(FreeVector h) {
  make_monic(h, order_.ring()->field());
  const VecTerm hl = h.lead();
  const bool ideal_case = order_.rank() == 1;

  struct Candidate {
    std::size_t i;
    Monomial lcm;
    bool coprime;
    bool alive;
  };
  std::vector<Candidate> candidates;
  for (const auto i : by_component_[hl.component]) {
    if (redundant_[i]) continue;
    const Monomial& gm = basis_[i].lead().monomial;
    candidates.push_back({i, lcm(gm, hl.monomial), ideal_case && coprime(gm, hl.monomial), true});
  }

  // Chain criterion on the existing pairs.
  std::erase_if(pairs_, [&](const Pair& p) {
    if (p.component != hl.component || !hl.monomial.divides(p.lcm)) return false;
    const Monomial li = lcm(basis_[p.i].lead().monomial, hl.monomial);
    const Monomial lj = lcm(basis_[p.j].lead().monomial, hl.monomial);
    return !(li == p.lcm) && !(lj == p.lcm);
  });

  // Criterion M: a candidate whose lcm is properly divisible by another's.
  for (auto& c : candidates) {
    for (const auto& d : candidates) {
      if (&c != &d && d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) {
        c.alive = false;
        break;
      }
    }
  }
  // Criterion F with the product criterion folded in.
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (!candidates[a].alive) continue;
    bool any_coprime = candidates[a].coprime;
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      if (candidates[b].alive && candidates[b].lcm == candidates[a].lcm) {
        any_coprime = any_coprime || candidates[b].coprime;
        candidates[b].alive = false;
      }
    }
    if (any_coprime) candidates[a].alive = false;
  }

  const std::size_t t = basis_.size();
  for (const auto& c : candidates) {
    if (!c.alive) continue;
    const long long deg = static_cast<long long>(c.lcm.degree()) + order_.twists()[hl.component];
    pairs_.push_back({c.i, t, c.lcm, hl.component, deg});
  }
  for (const auto i : by_component_[hl.component]) {
    if (!redundant_[i] && hl.monomial.divides(basis_[i].lead().monomial)) redundant_[i] = true;
  }
  basis_.push_back(std::move(h));
  redundant_.push_back(false);
  by_component_[hl.component].push_back(t);
  if (basis_.size() > max_basis_size_) {
    throw Error(ErrorKind::ResourceCap,
                "Gröbner basis exceeded " + std::to_string(max_basis_size_) + " elements");
  }
}

void GroebnerBuilder::complete(std::optional<long long> degree_bound) {
  while (const auto next = next_degree()) {
    const long long d = *next;
    if (degree_bound && d > *degree_bound) {
      completed_degree_ = std::max(completed_degree_, *degree_bound);
      return;
    }
    std::vector<FreeVector> items;
    for (auto it = pending_.begin(); it != pending_.end();) {
      if (it->first == d) {
        items.push_back(std::move(it->second));
        it = pending_.erase(it);
      } else {
        ++it;
      }
    }
    std::vector<Pair> current;
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.degree != d) return false;
      current.push_back(p);
      return true;
    });
    for (const auto& p : current) items.push_back(s_polynomial(p));
    for (auto& item : items) {
      FreeVector h = top_reduce(std::move(item));
      if (!h.is_zero()) insert(std::move(h));
    }
    completed_degree_ = std::max(completed_degree_, d);
  }
  completed_degree_ = std::numeric_limits<long long>::max();
}

GroebnerBasis GroebnerBuilder::finish() const {
  if (!is_complete()) throw Error(ErrorKind::InvalidArgument, "Gröbner builder not complete");
  std::vector<FreeVector> minimal;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!redundant_[i]) live.push_back(i);
  }
  for (std::size_t a = 0; a < live.size(); ++a) {
    const VecTerm& la = basis_[live[a]].lead();
    bool keep = true;
    for (std::size_t b = 0; b < live.size() && keep; ++b) {
      if (a == b) continue;
      const VecTerm& lb = basis_[live[b]].lead();
      if (lb.component == la.component && lb.monomial.divides(la.monomial) &&
          (!(lb.monomial == la.monomial) || b < a)) {
        keep = false;
      }
    }
    if (keep) minimal.push_back(basis_[live[a]]);
  }
  const GroebnerBasis interim(order_, minimal, false);
  std::vector<FreeVector> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    FreeVector r;
    r.terms.push_back(g.lead());
    FreeVector rest = interim.normal_form(FreeVector{{tail(g).begin(), tail(g).end()}});
    r.terms.insert(r.terms.end(), rest.terms.begin(), rest.terms.end());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [this](const FreeVector& a, const FreeVector& b) {
    return order_.compare(a.lead(), b.lead()) > 0;
  });
  return GroebnerBasis(order_, std::move(reduced), true);
}

// ---------------------------------------------------------------------------

GroebnerBasis buchberger(const ModuleOrder& order, std::vector<FreeVector> generators,
                         const BuchbergerOptions& options) {
  GroebnerBuilder builder(order, options.max_basis_size);
  for (auto& g : generators) builder.add_generator(std::move(g));
  builder.complete(options.degree_bound);
  if (options.degree_bound && !builder.is_complete()) {
    // Truncated basis: correct up to the bound, not reduced.
    std::vector<FreeVector> partial;
    return GroebnerBasis(order, partial, false);
  }
  return builder.finish();
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const BuchbergerOptions& options) {
  std::vector<FreeVector> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw Error(ErrorKind::RingMismatch, "generator ring mismatch");
    gens.push_back(FreeVector::from_polynomial(g));
  }
  return buchberger(ModuleOrder(ring, {0}), std::move(gens), options);
}

std::vector<FreeVector> kernel_modulo(const RingPtr& ring, std::span<const FreeVector> columns,
                                      std::span<const int> source_twists,
                                      std::span<const int> target_twists,
                                      std::span<const FreeVector> target_relations) {
  if (columns.size() != source_twists.size()) {
    throw Error(ErrorKind::InvalidArgument, "kernel: column count does not match source twists");
  }
  const auto r = static_cast<std::uint32_t>(target_twists.size());
  const auto m = static_cast<std::uint32_t>(columns.size());
  if (m == 0) return {};
  std::vector<int> twists(target_twists.begin(), target_twists.end());
  twists.insert(twists.end(), source_twists.begin(), source_twists.end());
  const ModuleOrder order(ring, std::move(twists), r);

  GroebnerBuilder builder(order);
  for (std::uint32_t j = 0; j < m; ++j) {
    FreeVector g = columns[j];
    for (const auto& t : g.terms) {
      if (t.component >= r) throw Error(ErrorKind::InvalidArgument, "kernel: column outside target");
    }
    g.terms.push_back({Monomial{}, r + j, 1});
    builder.add_generator(std::move(g));
  }
  for (const auto& rel : target_relations) builder.add_generator(rel);
  builder.complete();
  const GroebnerBasis gb = builder.finish();

  std::vector<FreeVector> kernel;
  for (const auto& g : gb.elements()) {
    if (g.lead().component < r) continue;
    FreeVector k;
    k.terms.reserve(g.terms.size());
    for (const auto& t : g.terms) k.terms.push_back({t.monomial, t.component - r, t.coeff});
    canonicalize(k, *ring);
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace frobsyz
