#include "frobsyz/poly_ring.hpp"

#include <algorithm>
#include <set>

#include "frobsyz/errors.hpp"

namespace frobsyz {

std::string_view to_string(TermOrder order) noexcept {
  return order == TermOrder::GRevLex ? "grevlex" : "lex";
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, TermOrder order)
    : field_(field), variables_(std::move(variables)), order_(order) {
  if (variables_.size() > kMaxVariables) {
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate variable name '" + v + "'");
    }
  }
}

std::shared_ptr<const PolyRing> PolyRing::make(std::uint64_t p,
                                               std::vector<std::string> variables,
                                               TermOrder order) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(variables), order);
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

std::string PolyRing::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variables_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

namespace {

void enumerate(std::size_t var, std::size_t nvars, std::uint64_t remaining,
               std::array<Monomial::Exponent, kMaxVariables>& exps,
               std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = static_cast<Monomial::Exponent>(remaining);
    out.emplace_back(std::span<const Monomial::Exponent>(exps.data(), nvars));
    exps[var] = 0;
    return;
  }
  for (std::uint64_t k = 0; k <= remaining; ++k) {
    exps[var] = static_cast<Monomial::Exponent>(k);
    enumerate(var + 1, nvars, remaining - k, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> PolyRing::monomials_of_degree(std::uint64_t degree) const {
  std::vector<Monomial> out;
  if (variables_.empty()) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::array<Monomial::Exponent, kMaxVariables> exps{};
  enumerate(0, variables_.size(), degree, exps, out);
  std::sort(out.begin(), out.end(),
            [this](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

}  // namespace frobsyz
