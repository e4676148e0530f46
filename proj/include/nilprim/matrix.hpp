#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilprim/ff.hpp"
#include "nilprim/linalg.hpp"

namespace nilprim {

/// n x n matrix over a shared field. Vectors are rows; a matrix acts on the
/// right (v -> v M).
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr F, int n);

  static Matrix identity(FieldPtr F, int n);
  static Matrix scalar(FieldPtr F, int n, FieldElem s);
  /// Prime-field convenience: integer entries reduced mod p.
  static Matrix from_ints(FieldPtr F, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_entries(FieldPtr F, int n, std::vector<FieldElem> entries);

  int degree() const { return n_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<FieldElem>& entries() const { return a_; }

  FieldElem operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  FieldElem& at(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
  Vec row(int r) const;

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix operator-() const;
  Matrix scaled(FieldElem s) const;
  Vec apply(const Vec& v) const;

  bool operator==(const Matrix& b) const { return n_ == b.n_ && a_ == b.a_ && same_field(b); }
  /// Canonical total order on entry codes; used for deterministic tie-breaks.
  bool key_less(const Matrix& b) const { return a_ < b.a_; }

  bool is_identity() const;
  bool is_scalar() const;
  std::size_t hash() const;
  bool same_field(const Matrix& b) const {
    return field_ == b.field_ || (field_ && b.field_ && field_->same_as(*b.field_));
  }

 private:
  void check_compatible(const Matrix& b) const;

  FieldPtr field_;
  int n_ = 0;
  std::vector<FieldElem> a_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

Matrix pow(const Matrix& m, std::uint64_t e);
FieldElem determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// a^-1 b^-1 a b.
Matrix commutator(const Matrix& a, const Matrix& b);
/// b^-1 a b.
Matrix conjugate(const Matrix& a, const Matrix& b);

/// Least e >= 1 with M^e = 1. Throws CapExceeded beyond cap, InvalidArgument
/// for singular M.
std::uint64_t matrix_order(const Matrix& m, std::uint64_t cap = std::uint64_t{1} << 20);
/// Order of M when a multiple of it is known (e.g. the group order).
std::uint64_t matrix_order_dividing(const Matrix& m, std::uint64_t multiple);

/// Row-major text form: entries in field text form separated by ',', rows by
/// ';'. Over GF(p^k) each entry contributes k consecutive coefficients.
std::string to_string(const Matrix& m);
Matrix parse_matrix(FieldPtr F, std::string_view text);

/// Flattened entries, as a vector of length n^2.
Vec flatten(const Matrix& m);
Matrix unflatten(FieldPtr F, int n, const Vec& v);

}  // namespace nilprim
