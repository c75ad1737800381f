#include "frobsyz/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "frobsyz/errors.hpp"

namespace frobsyz {

namespace {

// v - c·m·w with both canonical; result canonical (not reduced).
FreeVector subtract_multiple(const PolyRing& ring, const FreeVector& v, const Polynomial& f,
                             const FreeVector& w) {
  const auto& field = ring.field();
  FreeVector out = v;
  for (const auto& ft : f.terms()) {
    for (const auto& wt : w.terms) {
      out.terms.push_back({ft.monomial * wt.monomial, wt.component,
                           field.neg(field.mul(ft.coeff, wt.coeff))});
    }
  }
  canonicalize(out, ring);
  return out;
}

std::vector<int> vector_degrees(const std::vector<FreeVector>& vs, const std::vector<int>& twists) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(static_cast<int>(vector_degree(v, twists)));
  return out;
}

}  // namespace

std::vector<FreeVector> minimal_generators(const QuotientRing& ring, const std::vector<int>& twists,
                                           std::vector<FreeVector> candidates,
                                           const std::vector<FreeVector>& base) {
  std::vector<std::pair<long long, FreeVector>> work;
  for (auto& c : candidates) {
    FreeVector r = ring.reduce(std::move(c));
    if (r.is_zero()) continue;
    const long long d = vector_degree(r, twists);
    work.emplace_back(d, std::move(r));
  }
  std::stable_sort(work.begin(), work.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const ModuleOrder order(ring.ambient(), twists);
  GroebnerBuilder builder(order);
  for (const auto& b : base) builder.add_generator(b);
  for (auto& r : ring.relations(static_cast<std::uint32_t>(twists.size()))) {
    builder.add_generator(std::move(r));
  }
  std::vector<FreeVector> kept;
  for (auto& [d, v] : work) {
    builder.complete(d);
    if (builder.reduces_to_zero(v)) continue;
    kept.push_back(v);
    builder.add_generator(std::move(v));
  }
  return kept;
}

GradedMatrix syzygy_matrix(const GradedMatrix& phi) {
  const auto& ring = *phi.ring();
  const auto& src = phi.source().twists;
  const auto& tgt = phi.target().twists;
  std::vector<FreeVector> kernel;
  if (phi.rows() == 0) {
    for (std::uint32_t c = 0; c < phi.cols(); ++c) kernel.push_back(FreeVector::unit(c));
  } else if (phi.cols() > 0) {
    kernel = kernel_modulo(ring.ambient(), phi.columns(), src, tgt, ring.relations(phi.rows()));
  }
  auto gens = minimal_generators(ring, src, std::move(kernel));
  GradedFreeModule source{phi.ring(), vector_degrees(gens, src)};
  return GradedMatrix(std::move(source), phi.source(), std::move(gens));
}

GradedMatrix minimal_presentation(const ModulePresentation& m) {
  const auto& ring = *m.ring();
  const auto& poly = *ring.ambient();
  const auto& field = poly.field();
  std::vector<int> twists = m.generator_twists();
  std::vector<FreeVector> cols = m.matrix().columns();

  while (true) {
    std::optional<std::pair<std::size_t, VecTerm>> pivot;
    for (std::size_t c = 0; c < cols.size() && !pivot; ++c) {
      for (const auto& t : cols[c].terms) {
        if (t.monomial.is_one()) {
          pivot.emplace(c, t);
          break;
        }
      }
    }
    if (!pivot) break;
    const auto [pc, pt] = *pivot;
    const std::uint32_t row = pt.component;
    const Coeff inv = field.inv(pt.coeff);
    const FreeVector pcol = cols[pc];
    std::vector<FreeVector> next;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pc) continue;
      Polynomial a = cols[c].entry(ring.ambient(), row);
      FreeVector col = cols[c];
      if (!a.is_zero()) col = subtract_multiple(poly, col, a.scaled(inv), pcol);
      FreeVector renumbered;
      for (const auto& t : col.terms) {
        if (t.component == row) {
          throw Error(ErrorKind::EngineInconsistency, "pivot row not cleared");
        }
        renumbered.terms.push_back(
            {t.monomial, t.component > row ? t.component - 1 : t.component, t.coeff});
      }
      next.push_back(ring.reduce(std::move(renumbered)));
    }
    twists.erase(twists.begin() + row);
    cols = std::move(next);
  }
  auto gens = minimal_generators(ring, twists, std::move(cols));
  GradedFreeModule source{m.ring(), vector_degrees(gens, twists)};
  return GradedMatrix(std::move(source), GradedFreeModule{m.ring(), std::move(twists)},
                      std::move(gens));
}

std::optional<int> MinimalResolution::projective_dimension() const {
  if (!terminated) return std::nullopt;
  const auto r = complex.ranks();
  int last = -1;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] > 0) last = static_cast<int>(j);
  }
  return last;
}

MinimalResolution minimal_free_resolution(const ModulePresentation& m, int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "resolution steps must be >= 0");
  const GradedMatrix phi1 = minimal_presentation(m);
  if (steps == 0) {
    return MinimalResolution{FreeComplex(phi1.target()), phi1.target().rank() == 0 || phi1.cols() == 0};
  }
  std::vector<GradedMatrix> maps{phi1};
  bool terminated = phi1.cols() == 0;
  while (static_cast<int>(maps.size()) < steps) {
    if (terminated) {
      const auto& last = maps.back();
      maps.push_back(GradedMatrix::zero(GradedFreeModule{m.ring(), {}}, last.source()));
      continue;
    }
    GradedMatrix next = syzygy_matrix(maps.back());
    if (!next.is_minimal()) {
      throw Error(ErrorKind::EngineInconsistency, "resolution map has a unit entry");
    }
    terminated = next.cols() == 0;
    maps.push_back(std::move(next));
  }
  return MinimalResolution{FreeComplex(std::move(maps)), terminated};
}

ModulePresentation syzygy_module(const MinimalResolution& res, int i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "syzygy index must be >= 1");
  if (static_cast<std::size_t>(i + 1) > res.complex.length() && !res.terminated) {
    throw Error(ErrorKind::InvalidArgument, "resolution too short for the requested syzygy");
  }
  return ModulePresentation(res.complex.map(static_cast<std::size_t>(i + 1)));
}

ModulePresentation syzygy_module(const ModulePresentation& m, int i) {
  return syzygy_module(minimal_free_resolution(m, i + 1), i);
}

}  // namespace frobsyz
