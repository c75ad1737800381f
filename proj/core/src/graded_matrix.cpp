#include "frobsyz/graded_matrix.hpp"

#include "frobsyz/errors.hpp"

namespace frobsyz {

long long vector_degree(const FreeVector& v, const std::vector<int>& twists) {
  const auto& t = v.lead();
  return static_cast<long long>(t.monomial.degree()) + twists.at(t.component);
}

GradedMatrix::GradedMatrix(GradedFreeModule source, GradedFreeModule target,
                           std::vector<FreeVector> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (!same_ring(source_.ring, target_.ring)) {
    throw Error(ErrorKind::RingMismatch, "matrix source and target over different rings");
  }
  if (columns_.size() != source_.rank()) {
    throw Error(ErrorKind::InvalidArgument, "column count does not match source rank");
  }
  const auto& R = *source_.ring;
  for (std::uint32_t c = 0; c < columns_.size(); ++c) {
    auto& col = columns_[c];
    for (const auto& t : col.terms) {
      if (t.component >= target_.rank()) {
        throw Error(ErrorKind::InvalidArgument, "matrix entry outside target rank");
      }
    }
    col = R.reduce(std::move(col));
    for (const auto& t : col.terms) {
      const long long deg = static_cast<long long>(t.monomial.degree()) + target_.twists[t.component];
      if (deg != source_.twists[c]) {
        throw Error(ErrorKind::NonHomogeneous,
                    "matrix entry (" + std::to_string(t.component) + "," + std::to_string(c) +
                        ") has a term of the wrong degree");
      }
    }
  }
}

GradedMatrix GradedMatrix::from_entries(GradedFreeModule source, GradedFreeModule target,
                                        const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != target.rank()) {
    throw Error(ErrorKind::InvalidArgument, "row count does not match target rank");
  }
  std::vector<FreeVector> cols(source.rank());
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != source.rank()) {
      throw Error(ErrorKind::InvalidArgument, "ragged matrix rows");
    }
    for (std::uint32_t c = 0; c < rows[r].size(); ++c) {
      for (const auto& t : rows[r][c].terms()) cols[c].terms.push_back({t.monomial, r, t.coeff});
    }
  }
  return GradedMatrix(std::move(source), std::move(target), std::move(cols));
}

GradedMatrix GradedMatrix::identity(const GradedFreeModule& module) {
  std::vector<FreeVector> cols;
  for (std::uint32_t c = 0; c < module.rank(); ++c) cols.push_back(FreeVector::unit(c));
  return GradedMatrix(module, module, std::move(cols));
}

GradedMatrix GradedMatrix::zero(GradedFreeModule source, GradedFreeModule target) {
  std::vector<FreeVector> cols(source.rank());
  return GradedMatrix(std::move(source), std::move(target), std::move(cols));
}

Polynomial GradedMatrix::entry(std::uint32_t row, std::uint32_t col) const {
  return columns_.at(col).entry(ring()->ambient(), row);
}

bool GradedMatrix::is_zero() const noexcept {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool GradedMatrix::is_minimal() const noexcept {
  for (const auto& c : columns_) {
    for (const auto& t : c.terms) {
      if (t.monomial.is_one()) return false;
    }
  }
  return true;
}

FreeVector GradedMatrix::apply(const FreeVector& v) const {
  const auto& field = ring()->ambient()->field();
  FreeVector out;
  for (const auto& t : v.terms) {
    for (const auto& s : columns_.at(t.component).terms) {
      out.terms.push_back({t.monomial * s.monomial, s.component, field.mul(t.coeff, s.coeff)});
    }
  }
  return ring()->reduce(std::move(out));
}

std::string GradedMatrix::to_string() const {
  std::string s = "[";
  for (std::uint32_t r = 0; r < rows(); ++r) {
    if (r) s += ", ";
    s += "[";
    for (std::uint32_t c = 0; c < cols(); ++c) {
      if (c) s += ", ";
      s += entry(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(b.target() == a.source())) {
    throw Error(ErrorKind::InvalidArgument, "compose: incompatible modules");
  }
  std::vector<FreeVector> cols;
  cols.reserve(b.cols());
  for (const auto& col : b.columns()) cols.push_back(a.apply(col));
  return GradedMatrix(b.source(), a.target(), std::move(cols));
}

}  // namespace frobsyz
