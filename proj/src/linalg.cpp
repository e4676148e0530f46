#include "nilprim/linalg.hpp"

#include <algorithm>

#include "nilprim/error.hpp"

namespace nilprim {

namespace {

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].code != 0) return i;
  return v.size();
}

// row <- row - f * other
void axpy(const Field& F, Vec& row, FieldElem f, const Vec& other, std::size_t from) {
  if (f.code == 0) return;
  for (std::size_t j = from; j < row.size(); ++j)
    if (other[j].code != 0) row[j] = F.sub(row[j], F.mul(f, other[j]));
}

}  // namespace

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x.code == 0; });
}

EchelonBasis::EchelonBasis(FieldPtr F, std::size_t dim) : field_(std::move(F)), dim_(dim) {}

Vec EchelonBasis::reduce(Vec v) const {
  const Field& F = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElem c = v[pivots_[i]];
    if (c.code != 0) axpy(F, v, c, rows_[i], pivots_[i]);
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vec& v) {
  if (v.size() != dim_) throw InvalidArgument("vector length does not match subspace dimension");
  const Field& F = *field_;
  Vec r = reduce(v);
  const std::size_t piv = first_nonzero(r);
  if (piv == r.size()) return false;
  const FieldElem s = F.inv(r[piv]);
  for (std::size_t j = piv; j < r.size(); ++j) r[j] = F.mul(r[j], s);
  for (auto& row : rows_) axpy(F, row, row[piv], r, piv);
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  return true;
}

std::vector<Vec> nullspace(const Field& F, std::vector<Vec> rows, std::size_t ncols) {
  std::vector<std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].code == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const FieldElem s = F.inv(rows[rank][c]);
    for (std::size_t j = c; j < ncols; ++j) rows[rank][j] = F.mul(rows[rank][j], s);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank) axpy(F, rows[r], rows[r][c], rows[rank], c);
    pivot_of_row.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_of_row) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, F.zero());
    x[free] = F.one();
    for (std::size_t r = 0; r < rank; ++r) x[pivot_of_row[r]] = F.neg(rows[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_of(const FieldPtr& F, const std::vector<Vec>& rows, std::size_t ncols) {
  EchelonBasis b(F, ncols);
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

std::string vec_to_string(const Field& F, const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += F.is_prime_field() ? "," : ";";
    out += F.to_string(v[i]);
  }
  return out + "]";
}

}  // namespace nilprim
