#include "frobsyz/syzygy_search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "frobsyz/errors.hpp"

namespace frobsyz {

std::string SearchModule::to_string() const {
  switch (kind) {
    case SearchModuleKind::ResidueField: return "k";
    case SearchModuleKind::MaximalPower: return "R/m^" + std::to_string(k);
    case SearchModuleKind::Parameter: return "R/(parameters)";
  }
  return "k";
}

FamilySpec FamilySpec::builtin_dim2() {
  FamilySpec f;
  f.num_variables = 3;
  f.min_degree = 2;
  f.max_degree = 3;
  f.max_generators = 4;
  f.dimension = 2;
  f.max_instances = 24;
  f.modules = {{SearchModuleKind::ResidueField, 1}, {SearchModuleKind::MaximalPower, 2}};
  return f;
}

FamilySpec FamilySpec::builtin_dim1() {
  FamilySpec f;
  f.num_variables = 2;
  f.min_degree = 2;
  f.max_degree = 2;
  f.max_generators = 2;
  f.dimension = 1;
  f.max_instances = 24;
  f.modules = {{SearchModuleKind::ResidueField, 1},
               {SearchModuleKind::MaximalPower, 2},
               {SearchModuleKind::Parameter, 1}};
  return f;
}

std::size_t Catalog::flagged_entries() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const CatalogEntry& e) { return !e.flagged.empty(); }));
}

namespace {

using Exponents = std::vector<std::uint32_t>;

/// Smallest sorted exponent list over all permutations of the variables.
std::vector<Exponents> canonical_key(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Exponents> best;
  do {
    std::vector<Exponents> key;
    for (const auto& g : gens) {
      Exponents e(n);
      for (std::size_t v = 0; v < n; ++v) e[perm[v]] = g[v];
      key.push_back(std::move(e));
    }
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool divides_any(const Monomial& m, const std::vector<Monomial>& chosen) {
  return std::any_of(chosen.begin(), chosen.end(),
                     [&](const Monomial& c) { return c.divides(m) || m.divides(c); });
}

}  // namespace

std::vector<HomogeneousIdeal> enumerate_family(const FamilySpec& family) {
  std::vector<HomogeneousIdeal> out;
  if (family.num_variables == 0 || family.max_generators == 0 || family.max_instances == 0) return out;
  std::vector<std::string> vars;
  for (unsigned v = 0; v < family.num_variables; ++v) {
    vars.push_back(family.num_variables <= 3 ? std::string(1, "xyz"[v]) : "x" + std::to_string(v + 1));
  }
  const RingPtr s = PolyRing::make(family.p, vars);
  std::vector<Monomial> pool;
  for (unsigned d = family.min_degree; d <= family.max_degree; ++d) {
    const auto monos = s->monomials_of_degree(d);
    pool.insert(pool.end(), monos.begin(), monos.end());
  }
  std::set<std::vector<Exponents>> seen;
  std::vector<Monomial> chosen;

  // Depth-first over increasing index tuples of a fixed size.
  const auto visit = [&](auto&& self, std::size_t start, unsigned size) -> void {
    if (out.size() >= family.max_instances) return;
    if (chosen.size() == size) {
      if (!seen.insert(canonical_key(chosen, family.num_variables)).second) return;
      HomogeneousIdeal ideal = HomogeneousIdeal::from_monomials(s, chosen);
      const auto ring = QuotientRing::make(ideal);
      if (family.dimension && ring->dimension() != *family.dimension) return;
      if (family.depth_zero_only && !ring->depth_zero()) return;
      out.push_back(std::move(ideal));
      return;
    }
    for (std::size_t idx = start; idx < pool.size(); ++idx) {
      if (divides_any(pool[idx], chosen)) continue;
      chosen.push_back(pool[idx]);
      self(self, idx + 1, size);
      chosen.pop_back();
      if (out.size() >= family.max_instances) return;
    }
  };
  for (unsigned size = 1; size <= family.max_generators; ++size) visit(visit, 0, size);
  return out;
}

Catalog search_finite_syzygies(const FamilySpec& family, const SearchBounds& bounds) {
  if (bounds.i_max < 1) throw Error(ErrorKind::InvalidArgument, "i_max must be >= 1");
  Catalog catalog;
  for (const auto& ideal : enumerate_family(family)) {
    const auto ring = QuotientRing::make(ideal);
    ++catalog.rings;
    for (const auto& spec : family.modules) {
      CatalogEntry entry;
      entry.ring = ring->to_string();
      entry.module = spec.to_string();
      entry.d = ring->dimension();
      entry.depth_zero = ring->depth_zero();
      try {
        ModulePresentation m = ModulePresentation::zero(ring);
        switch (spec.kind) {
          case SearchModuleKind::ResidueField:
            m = ModulePresentation::quotient(ring, ring->maximal().basis());
            break;
          case SearchModuleKind::MaximalPower:
            m = ModulePresentation::quotient(
                ring, HomogeneousIdeal::maximal_power(ring->ambient(), spec.k).basis());
            break;
          case SearchModuleKind::Parameter: {
            const auto params = find_system_of_parameters(ring);
            m = ModulePresentation::quotient(ring, params);
            entry.module = "R/(";
            for (std::size_t j = 0; j < params.size(); ++j) {
              entry.module += (j ? ", " : "") + params[j].to_string();
            }
            entry.module += ")";
            break;
          }
        }
        const auto res = minimal_free_resolution(m, bounds.i_max + 1);
        entry.projective_dimension = res.projective_dimension();
        for (int i = 1; i <= bounds.i_max; ++i) {
          const auto syz = syzygy_module(res, i);
          entry.syzygies.push_back(SyzygyRecord{i, syz.dimension(), syz.length(), "observed"});
          if (i >= entry.d + 1 && !res.terminated && syz.has_finite_length() && !syz.is_zero()) {
            entry.flagged.push_back(i);
          }
        }
      } catch (const Error& e) {
        entry.error = std::string(to_string(e.kind())) + ": " + e.what();
      }
      catalog.entries.push_back(std::move(entry));
    }
  }
  return catalog;
}

}  // namespace frobsyz
