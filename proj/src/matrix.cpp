#include "nilprim/matrix.hpp"

#include "nilprim/error.hpp"
#include "nilprim/numtheory.hpp"

namespace nilprim {

Matrix::Matrix(FieldPtr F, int n)
    : field_(std::move(F)), n_(n), a_(static_cast<std::size_t>(n * n), FieldElem{0}) {
  if (n < 1) throw InvalidArgument("matrix degree must be positive");
}

Matrix Matrix::identity(FieldPtr F, int n) { return scalar(std::move(F), n, FieldElem{1}); }

Matrix Matrix::scalar(FieldPtr F, int n, FieldElem s) {
  Matrix m(std::move(F), n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::from_ints(FieldPtr F, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(F, n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("matrix rows must have length n");
    int c = 0;
    for (auto v : row) m.at(r, c++) = F->from_int(v);
    ++r;
  }
  return m;
}

Matrix Matrix::from_entries(FieldPtr F, int n, std::vector<FieldElem> entries) {
  if (entries.size() != static_cast<std::size_t>(n * n)) throw InvalidArgument("need n^2 entries");
  Matrix m(std::move(F), n);
  m.a_ = std::move(entries);
  return m;
}

Vec Matrix::row(int r) const {
  const auto begin = a_.begin() + r * n_;
  return Vec(begin, begin + n_);
}

void Matrix::check_compatible(const Matrix& b) const {
  if (n_ != b.n_ || !same_field(b)) throw InvalidArgument("matrices differ in degree or field");
}

Matrix Matrix::operator*(const Matrix& b) const {
  check_compatible(b);
  const Field& F = *field_;
  Matrix r(field_, n_);
  const auto n = static_cast<std::size_t>(n_);
  if (F.is_prime_field()) {
    const std::uint64_t p = F.characteristic();
    const bool lazy = p < (1u << 16);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t l = 0; l < n; ++l) {
          acc += std::uint64_t{a_[i * n + l].code} * b.a_[l * n + j].code;
          if (!lazy) acc %= p;
        }
        r.a_[i * n + j] = FieldElem{static_cast<std::uint32_t>(acc % p)};
      }
    }
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const FieldElem x = a_[i * n + l];
      if (x.code == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        r.a_[i * n + j] = F.add(r.a_[i * n + j], F.mul(x, b.a_[l * n + j]));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  check_compatible(b);
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], b.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  check_compatible(b);
  Matrix r(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], b.a_[i]);
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.a_) x = field_->neg(x);
  return r;
}

Matrix Matrix::scaled(FieldElem s) const {
  Matrix r(*this);
  for (auto& x : r.a_) x = field_->mul(x, s);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  const Field& F = *field_;
  const auto n = static_cast<std::size_t>(n_);
  Vec out(n, F.zero());
  if (F.is_prime_field()) {
    const std::uint64_t p = F.characteristic();
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc = (acc + std::uint64_t{v[i].code} * a_[i * n + j].code) % p;
      out[j] = FieldElem{static_cast<std::uint32_t>(acc)};
    }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].code == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = F.add(out[j], F.mul(v[i], a_[i * n + j]));
  }
  return out;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j).code != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::is_scalar() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i != j && (*this)(i, j).code != 0) return false;
      if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
    }
  return true;
}

std::size_t Matrix::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : a_) {
    h ^= x.code;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Matrix pow(const Matrix& m, std::uint64_t e) {
  Matrix r = Matrix::identity(m.field_ptr(), m.degree());
  Matrix b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

namespace {

// Gauss-Jordan on [m | I]; returns determinant and optionally the inverse.
FieldElem eliminate(const Matrix& m, Matrix* inv_out) {
  const Field& F = m.field();
  const int n = m.degree();
  Matrix a = m;
  Matrix inv = Matrix::identity(m.field_ptr(), n);
  FieldElem det = F.one();
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a(piv, c).code == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
      det = F.neg(det);
    }
    const FieldElem d = a(c, c);
    det = F.mul(det, d);
    const FieldElem s = F.inv(d);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) = F.mul(a(c, j), s);
      inv.at(c, j) = F.mul(inv(c, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).code == 0) continue;
      const FieldElem f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = F.sub(a(r, j), F.mul(f, a(c, j)));
        inv.at(r, j) = F.sub(inv(r, j), F.mul(f, inv(c, j)));
      }
    }
  }
  if (inv_out) *inv_out = std::move(inv);
  return det;
}

}  // namespace

FieldElem determinant(const Matrix& m) { return eliminate(m, nullptr); }

std::optional<Matrix> inverse(const Matrix& m) {
  Matrix inv;
  if (eliminate(m, &inv).code == 0) return std::nullopt;
  return inv;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  auto ai = inverse(a), bi = inverse(b);
  if (!ai || !bi) throw InvalidArgument("commutator of singular matrices");
  return *ai * *bi * a * b;
}

Matrix conjugate(const Matrix& a, const Matrix& b) {
  auto bi = inverse(b);
  if (!bi) throw InvalidArgument("conjugation by a singular matrix");
  return *bi * a * b;
}

std::uint64_t matrix_order(const Matrix& m, std::uint64_t cap) {
  if (determinant(m).code == 0) throw InvalidArgument("order of a singular matrix");
  Matrix cur = m;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (cur.is_identity()) return e;
    cur = cur * m;
  }
  throw CapExceeded("matrix order exceeds cap " + std::to_string(cap));
}

std::uint64_t matrix_order_dividing(const Matrix& m, std::uint64_t multiple) {
  if (!pow(m, multiple).is_identity()) throw InvalidArgument("matrix order does not divide the given multiple");
  std::uint64_t order = multiple;
  for (auto r : nt::prime_divisors(multiple))
    while (order % r == 0 && pow(m, order / r).is_identity()) order /= r;
  return order;
}

std::string to_string(const Matrix& m) {
  std::string out;
  const Field& F = m.field();
  for (int i = 0; i < m.degree(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < m.degree(); ++j) {
      if (j) out += ',';
      out += F.to_string(m(i, j));
    }
  }
  return out;
}

Matrix parse_matrix(FieldPtr F, std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    rows.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  const int n = static_cast<int>(rows.size());
  const auto k = static_cast<std::size_t>(F->degree());
  std::vector<FieldElem> entries;
  for (auto row : rows) {
    std::vector<std::string_view> parts;
    std::size_t s = 0;
    while (true) {
      const auto pos = row.find(',', s);
      parts.push_back(row.substr(s, pos == std::string_view::npos ? pos : pos - s));
      if (pos == std::string_view::npos) break;
      s = pos + 1;
    }
    if (parts.size() != static_cast<std::size_t>(n) * k)
      throw InvalidArgument("matrix row has the wrong number of entries");
    for (std::size_t e = 0; e < static_cast<std::size_t>(n); ++e) {
      const auto first = parts[e * k];
      const auto last = parts[e * k + k - 1];
      const std::string_view entry(first.data(), static_cast<std::size_t>(last.data() + last.size() - first.data()));
      entries.push_back(F->parse(entry));
    }
  }
  return Matrix::from_entries(std::move(F), n, std::move(entries));
}

Vec flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(FieldPtr F, int n, const Vec& v) { return Matrix::from_entries(std::move(F), n, v); }

}  // namespace nilprim
