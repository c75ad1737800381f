#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobsyz/monomial.hpp"
#include "frobsyz/prime_field.hpp"

namespace frobsyz {

/// Both orders compare total degree first; `Lex` breaks ties lexicographically
/// (graded lex), `GRevLex` by reverse lexicographic comparison.
enum class TermOrder { GRevLex, Lex };

std::string_view to_string(TermOrder order) noexcept;

/// The ambient polynomial ring F_p[x_1..x_n] with the standard grading.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> variables,
           TermOrder order = TermOrder::GRevLex);

  static std::shared_ptr<const PolyRing> make(std::uint64_t p,
                                              std::vector<std::string> variables,
                                              TermOrder order = TermOrder::GRevLex);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  TermOrder order() const noexcept { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    if (order_ == TermOrder::GRevLex) {
      for (std::size_t i = kMaxVariables; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  std::string format(const Monomial& m) const;

  /// All monomials of the given total degree, in descending term order.
  std::vector<Monomial> monomials_of_degree(std::uint64_t degree) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Same ring object or structurally equal rings.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace frobsyz
