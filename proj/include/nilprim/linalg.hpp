#pragma once

// Row-vector linear algebra over a Field.

#include <cstddef>
#include <string>
#include <vector>

#include "nilprim/ff.hpp"

namespace nilprim {

using Vec = std::vector<FieldElem>;

/// A subspace kept in fully reduced row echelon form. Rows are sorted by
/// pivot column and every pivot is 1, so rows() is a canonical key of the
/// subspace.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr F, std::size_t dim);

  /// Adds v to the span; returns false if v was already in it.
  bool insert(const Vec& v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldPtr& field() const { return field_; }

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : A x = 0}, where A is given by its rows (each of length ncols).
std::vector<Vec> nullspace(const Field& F, std::vector<Vec> rows, std::size_t ncols);

std::size_t rank_of(const FieldPtr& F, const std::vector<Vec>& rows, std::size_t ncols);

bool is_zero(const Vec& v);

std::string vec_to_string(const Field& F, const Vec& v);

}  // namespace nilprim
