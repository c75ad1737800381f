#include "frobsyz/polynomial.hpp"

#include <algorithm>

#include "frobsyz/errors.hpp"

namespace frobsyz {

namespace {

void require_same(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw Error(ErrorKind::RingMismatch, "polynomials over different rings");
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::InvalidArgument, "null ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {
  refresh_degree();
}

void Polynomial::refresh_degree() noexcept {
  degree_.reset();
  if (terms_.empty()) return;
  const auto d = terms_.front().monomial.degree();
  for (const auto& t : terms_) {
    if (t.monomial.degree() != d) return;
  }
  degree_ = d;
}

Polynomial Polynomial::constant(RingPtr ring, long long value) {
  const Coeff c = ring->field().from_integer(value);
  std::vector<Term> terms;
  if (c != 0) terms.push_back({Monomial{}, c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) {
    throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  }
  return Polynomial(std::move(ring), {{Monomial::variable(index), 1}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  c %= ring->field().characteristic();
  std::vector<Term> terms;
  if (c != 0) terms.push_back({m, c});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = *ring;
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) {
    return ord.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    t.coeff %= field.characteristic();
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = field.add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  return Polynomial(std::move(ring), std::move(merged));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading term of zero polynomial");
  return terms_.front();
}

std::optional<Term> Polynomial::inhomogeneous_term() const {
  if (terms_.empty()) return std::nullopt;
  const auto d = terms_.front().monomial.degree();
  for (const auto& t : terms_) {
    if (t.monomial.degree() != d) return t;
  }
  return std::nullopt;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1 % ring_->field().characteristic())); }

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& field = ring_->field();
  c %= field.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.coeff = field.mul(t.coeff, c);
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  const auto& field = ring_->field();
  c %= field.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial * m, field.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(terms));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same(a.ring_, b.ring_);
  const auto& ord = *a.ring_;
  const auto& field = a.ring_->field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto cmp = ord.compare(a.terms_[i].monomial, b.terms_[j].monomial);
    if (cmp > 0) {
      out.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      const Coeff c = field.add(a.terms_[i].coeff, b.terms_[j].coeff);
      if (c != 0) out.push_back({a.terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.terms_.begin() + static_cast<std::ptrdiff_t>(i), a.terms_.end());
  out.insert(out.end(), b.terms_.begin() + static_cast<std::ptrdiff_t>(j), b.terms_.end());
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.ring_, b.ring_);
  const auto& field = a.ring_->field();
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back({s.monomial * t.monomial, field.mul(s.coeff, t.coeff)});
    }
  }
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const long long c = field.centered(t.coeff);
    const bool negative = c < 0 && field.characteristic() != 2;
    const long long mag = negative ? -c : static_cast<long long>(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool one = t.monomial.is_one();
    if (mag != 1 || one) {
      out += std::to_string(mag);
      if (!one) out += '*';
    }
    if (!one) out += ring_->format(t.monomial);
  }
  return out;
}

Polynomial pow(const Polynomial& f, unsigned n) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::uint64_t frobenius_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) {
    if (q > (1ULL << 32) / p) throw Error(ErrorKind::Overflow, "p^e exceeds supported range");
    q *= p;
  }
  return q;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  if (e == 0) return f;
  const std::uint64_t q = frobenius_q(f.ring()->field().characteristic(), e);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({scale_exponents(t.monomial, q), t.coeff});
  // Scaling exponents preserves the term order, but from_terms keeps the
  // invariant explicit.
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

}  // namespace frobsyz
