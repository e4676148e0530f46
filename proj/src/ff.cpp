#include "nilprim/ff.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

#include "nilprim/error.hpp"
#include "nilprim/numtheory.hpp"

namespace nilprim {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 31;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

// Dense polynomials over GF(p), little-endian, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_mod applies
    const std::uint32_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// x^(p^m) mod f by m successive p-th powers.
Poly frobenius_x(const Poly& f, std::uint32_t p, int m) {
  Poly h{0, 1};
  h = poly_mod(h, f, p);
  for (int i = 0; i < m; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

// Rabin: f | x^(p^k) - x and gcd(f, x^(p^(k/r)) - x) = 1 for each prime r | k.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  if (!poly_sub(frobenius_x(f, p, k), x, p).empty()) return false;
  for (auto r : nt::prime_divisors(static_cast<std::uint64_t>(k))) {
    Poly g = poly_gcd(f, poly_sub(frobenius_x(f, p, k / static_cast<int>(r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly digits_of(std::uint32_t code, std::uint32_t p, int k) {
  Poly d(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t code_of(const Poly& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return static_cast<std::uint32_t>(code);
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<std::uint32_t, int, Poly>, FieldPtr>& registry() {
  static std::map<std::tuple<std::uint32_t, int, Poly>, FieldPtr> r;
  return r;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

FieldPtr make_field(std::uint32_t p, int k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!nt::is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw InvalidArgument("field size exceeds 2^31");
  }

  Poly f;
  if (modulus) {
    f = *modulus;
    if (f.size() != static_cast<std::size_t>(k) + 1 || f.back() != 1)
      throw InvalidArgument("modulus must be monic of degree k");
    for (auto c : f)
      if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    if (!is_irreducible(f, p)) throw InvalidArgument("supplied modulus is reducible");
  } else {
    const std::uint64_t lower = q;  // number of choices for the low coefficients
    for (std::uint64_t c = 0; c < lower; ++c) {
      Poly cand = digits_of(static_cast<std::uint32_t>(c), p, k);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        f = std::move(cand);
        break;
      }
    }
  }

  std::lock_guard lock(registry_mutex());
  auto key = std::make_tuple(p, k, f);
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;
  auto F = std::make_shared<const Field>(p, k, f);
  registry().emplace(std::move(key), F);
  return F;
}

FieldPtr make_field_of_size(std::uint64_t q) {
  auto pp = nt::prime_power(q);
  if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  return make_field(static_cast<std::uint32_t>(pp->first), pp->second);
}

FieldPtr parse_field_descriptor(std::string_view text) {
  const auto slash = text.find('/');
  const auto caret = text.find('^');
  if (slash == std::string_view::npos || caret == std::string_view::npos || caret > slash)
    throw InvalidArgument("field descriptor must look like p^k/c0,...,ck");
  const auto p = parse_uint(text.substr(0, caret));
  const auto k = parse_uint(text.substr(caret + 1, slash - caret - 1));
  std::vector<std::uint32_t> mod;
  for (auto part : split(text.substr(slash + 1), ','))
    mod.push_back(static_cast<std::uint32_t>(parse_uint(part)));
  if (p > 0xffffffffULL || k > 64) throw InvalidArgument("field descriptor out of range");
  return make_field(static_cast<std::uint32_t>(p), static_cast<int>(k), std::move(mod));
}

Field::Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(static_cast<std::uint32_t>(nt::ipow(p, static_cast<unsigned>(k)))),
      modulus_(std::move(modulus)) {
  const std::uint64_t group = q_ - 1;
  const auto primes = nt::prime_divisors(group);
  for (std::uint32_t c = 1; c < q_; ++c) {
    const FieldElem x{c};
    bool prim = true;
    for (auto r : primes) {
      if (pow(x, group / r) == one()) {
        prim = false;
        break;
      }
    }
    if (prim) {
      primitive_ = x;
      break;
    }
  }
  if (k_ > 1 && q_ <= kTableLimit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    FieldElem cur = one();
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = cur.code;
      log_[cur.code] = i;
      cur = mul_poly(cur, primitive_);
    }
  }
}

FieldElem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > static_cast<std::size_t>(k_)) throw InvalidArgument("too many coefficients for field");
  Poly d(c.begin(), c.end());
  for (auto& x : d) x %= p_;
  return {code_of(d, p_)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem x) const { return digits_of(x.code, p_, k_); }

FieldElem Field::generator_x() const {
  if (k_ == 1) return neg(from_int(static_cast<std::int64_t>(modulus_[0])));
  return {p_};
}

FieldElem Field::add_digits(FieldElem a, FieldElem b) const {
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint32_t s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return {out};
}

FieldElem Field::neg_digits(FieldElem a) const {
  std::uint32_t x = a.code, out = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    x /= p_;
    place *= p_;
  }
  return {out};
}

FieldElem Field::mul_poly(FieldElem a, FieldElem b) const {
  Poly x = digits_of(a.code, p_, k_), y = digits_of(b.code, p_, k_);
  trim(x);
  trim(y);
  Poly r = poly_mulmod(x, y, modulus_, p_);
  r.resize(static_cast<std::size_t>(k_), 0);
  return {code_of(r, p_)};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.code == 0) throw InvalidArgument("inverse of zero");
  if (!exp_.empty()) {
    const std::uint32_t l = log_[a.code];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
  }
  return pow(a, q_ - 2);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  if (!exp_.empty()) return {exp_[(std::uint64_t{log_[a.code]} * (e % (q_ - 1))) % (q_ - 1)]};
  FieldElem r = one();
  while (e) {
    if (e & 1) r = k_ == 1 ? mul(r, a) : mul_poly(r, a);
    a = k_ == 1 ? mul(a, a) : mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem Field::primitive_power(std::uint64_t e) const {
  if (!exp_.empty()) return {exp_[e % (q_ - 1)]};
  return pow(primitive_, e % (q_ - 1));
}

bool Field::is_square(FieldElem x) const {
  if (x.code == 0 || p_ == 2) return true;
  return pow(x, (q_ - 1) / 2) == one();
}

std::optional<FieldElem> Field::sqrt(FieldElem x) const {
  if (x.code == 0) return zero();
  if (!is_square(x)) return std::nullopt;
  FieldElem r;
  if (p_ == 2) {
    r = pow(x, q_ / 2);
  } else {
    // Tonelli-Shanks with the primitive element as non-residue.
    std::uint64_t Q = q_ - 1;
    int S = 0;
    while (Q % 2 == 0) {
      Q /= 2;
      ++S;
    }
    FieldElem c = pow(primitive_, Q);
    r = pow(x, (Q + 1) / 2);
    FieldElem t = pow(x, Q);
    int M = S;
    while (t != one()) {
      int i = 0;
      FieldElem tt = t;
      while (tt != one()) {
        tt = mul(tt, tt);
        ++i;
      }
      FieldElem b = c;
      for (int j = 0; j < M - i - 1; ++j) b = mul(b, b);
      r = mul(r, b);
      c = mul(b, b);
      t = mul(t, c);
      M = i;
    }
  }
  const FieldElem other = neg(r);
  return other.code < r.code ? other : r;
}

std::string Field::to_string(FieldElem x) const {
  std::string out;
  const auto d = coeffs(x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

FieldElem Field::parse(std::string_view text) const {
  const auto parts = split(text, ',');
  if (parts.size() != static_cast<std::size_t>(k_))
    throw InvalidArgument("field element needs " + std::to_string(k_) + " coefficients");
  Poly d;
  for (auto part : parts) {
    const auto v = parse_uint(part);
    if (v >= p_) throw InvalidArgument("coefficient out of range for GF(" + std::to_string(p_) + ")");
    d.push_back(static_cast<std::uint32_t>(v));
  }
  return {code_of(d, p_)};
}

std::string Field::descriptor() const {
  std::string out = std::to_string(p_) + "^" + std::to_string(k_) + "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(modulus_[i]);
  }
  return out;
}

std::uint64_t element_order(const Field& F, FieldElem x) {
  if (x.code == 0) throw InvalidArgument("order of zero is undefined");
  std::uint64_t order = F.size() - 1;
  for (auto r : nt::prime_divisors(order)) {
    while (order % r == 0 && F.pow(x, order / r) == F.one()) order /= r;
  }
  return order;
}

FieldElem frobenius(const Field& F, FieldElem x, std::uint64_t base_size, std::uint64_t j) {
  auto pp = nt::prime_power(base_size);
  if (!pp || pp->first != F.characteristic() || F.degree() % pp->second != 0)
    throw InvalidArgument("base size must be p^d with d dividing the field degree");
  if (x.code == 0 || F.size() == 2) return x;
  return F.pow(x, nt::powmod(base_size, j, F.size() - 1));
}

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic() || big_->degree() % small_->degree() != 0)
    throw InvalidArgument("no embedding: degrees or characteristics do not match");
  const int k = small_->degree();
  basis_images_.push_back(big_->one());
  if (k == 1) return;

  const Field& B = *big_;
  const std::uint64_t step = (B.size() - 1) / (small_->size() - 1);
  const auto& m = small_->modulus();
  FieldElem root{};
  bool found = false;
  for (std::uint64_t j = 1; j < small_->size() && !found; ++j) {
    const FieldElem beta = B.primitive_power(j * step);
    FieldElem acc = B.zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = B.add(B.mul(acc, beta), B.from_int(m[i]));
    if (acc == B.zero()) {
      root = beta;
      found = true;
    }
  }
  if (!found) throw InvalidArgument("no root of the small modulus in the big field");
  for (int i = 1; i < k; ++i) basis_images_.push_back(B.mul(basis_images_.back(), root));

  const std::uint64_t want = small_->size() - 1;
  if (element_order(B, apply(small_->primitive())) != want)
    throw InvalidArgument("embedding does not preserve the order of the primitive element");
}

FieldElem Embedding::apply(FieldElem x) const {
  const Field& B = *big_;
  const auto c = small_->coeffs(x);
  FieldElem acc = B.zero();
  for (std::size_t i = 0; i < c.size(); ++i)
    acc = B.add(acc, B.mul(B.from_int(c[i]), basis_images_[i]));
  return acc;
}

std::optional<FieldElem> Embedding::preimage(FieldElem y) const {
  // Solve sum_i c_i * coords(basis_i) = coords(y) over GF(p).
  const std::uint32_t p = big_->characteristic();
  const std::size_t K = static_cast<std::size_t>(big_->degree());
  const std::size_t k = basis_images_.size();
  std::vector<std::vector<std::uint32_t>> rows(K, std::vector<std::uint32_t>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    const auto col = big_->coeffs(basis_images_[i]);
    for (std::size_t r = 0; r < K; ++r) rows[r][i] = col[r];
  }
  const auto rhs = big_->coeffs(y);
  for (std::size_t r = 0; r < K; ++r) rows[r][k] = rhs[r];

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < K; ++c) {
    std::size_t piv = rank;
    while (piv < K && rows[piv][c] == 0) ++piv;
    if (piv == K) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint32_t li = inv_mod(rows[rank][c], p);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(std::uint64_t{v} * li % p);
    for (std::size_t r = 0; r < K; ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t j = 0; j <= k; ++j)
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + p - f * rows[rank][j] % p) % p);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < K; ++r)
    if (rows[r][k] != 0) return std::nullopt;
  std::vector<std::uint32_t> c(k, 0);
  for (std::size_t r = 0; r < rank; ++r) c[pivot_col[r]] = rows[r][k];
  return small_->from_coeffs(c);
}

Embedding embed_subfield(FieldPtr small, FieldPtr big) { return Embedding(std::move(small), std::move(big)); }

std::pair<FieldElem, FieldElem> sum_of_two_squares_minus_one(const Field& F) {
  if (F.characteristic() == 2) throw InvalidArgument("sum of two squares equal to -1 needs odd characteristic");
  const FieldElem minus_one = F.neg(F.one());
  for (std::uint32_t c = 0; c < F.size(); ++c) {
    const FieldElem e{c};
    const FieldElem rest = F.sub(minus_one, F.mul(e, e));
    if (auto f = F.sqrt(rest)) return {e, *f};
  }
  throw InvalidArgument("no solution of e^2 + f^2 = -1 found");  // unreachable for odd p
}

}  // namespace nilprim
