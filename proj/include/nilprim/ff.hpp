#pragma once

// Exact arithmetic in GF(p^k), elements stored as packed base-p digit codes.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilprim {

/// An element of GF(p^k): code = sum c_i p^i where (c_0, ..., c_{k-1}) are the
/// coefficients in the residue basis 1, X, ..., X^{k-1}. Code order is the
/// deterministic scan order used by every search in the library.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Returns the (cached) field GF(p^k). Without an explicit modulus, the
/// irreducible monic polynomial that comes first in code order is used.
/// Throws InvalidArgument if p is not prime, p^k exceeds 2^31, or a supplied
/// modulus is not monic of degree k or is reducible.
FieldPtr make_field(std::uint32_t p, int k,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// GF(q) for a prime power q with the default modulus.
FieldPtr make_field_of_size(std::uint64_t q);

/// Parses the "p^k/c0,c1,...,ck" descriptor produced by Field::descriptor().
FieldPtr parse_field_descriptor(std::string_view text);

class Field {
 public:
  Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  /// k+1 coefficients, little-endian, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Generator of the multiplicative group, least in code order.
  FieldElem primitive() const { return primitive_; }

  bool same_as(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> c) const;
  std::vector<std::uint32_t> coeffs(FieldElem x) const;
  /// The residue class of X (the root of the modulus).
  FieldElem generator_x() const;

  FieldElem add(FieldElem a, FieldElem b) const {
    if (k_ == 1) {
      const std::uint32_t s = a.code + b.code;
      return {s >= p_ ? s - p_ : s};
    }
    return add_digits(a, b);
  }
  FieldElem neg(FieldElem a) const {
    if (k_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
    return neg_digits(a);
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (k_ == 1)
      return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
    if (a.code == 0 || b.code == 0) return zero();
    if (!exp_.empty()) {
      std::uint64_t e = std::uint64_t{log_[a.code]} + log_[b.code];
      if (e >= q_ - 1) e -= q_ - 1;
      return {exp_[e]};
    }
    return mul_poly(a, b);
  }
  /// Throws InvalidArgument on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// primitive()^e.
  FieldElem primitive_power(std::uint64_t e) const;

  bool is_square(FieldElem x) const;
  /// The square root with the smaller code, or nullopt for non-squares.
  std::optional<FieldElem> sqrt(FieldElem x) const;

  /// Comma-separated coefficient list, little-endian ("1,2" = 1 + 2X).
  std::string to_string(FieldElem x) const;
  FieldElem parse(std::string_view text) const;
  std::string descriptor() const;

 private:
  FieldElem add_digits(FieldElem a, FieldElem b) const;
  FieldElem neg_digits(FieldElem a) const;
  FieldElem mul_poly(FieldElem a, FieldElem b) const;

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElem primitive_{};
  std::vector<std::uint32_t> exp_;  // exp_[i] = primitive^i, when tabulated
  std::vector<std::uint32_t> log_;
};

/// Least e >= 1 with x^e = 1. Throws InvalidArgument for x = 0.
std::uint64_t element_order(const Field& F, FieldElem x);

/// x^(base_size^j). base_size must be p^d with d | k.
FieldElem frobenius(const Field& F, FieldElem x, std::uint64_t base_size, std::uint64_t j);

/// Injective ring map GF(p^k) -> GF(p^K) for k | K.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& big() const { return big_; }
  FieldElem apply(FieldElem x) const;
  /// The unique preimage if y lies in the image, else nullopt.
  std::optional<FieldElem> preimage(FieldElem y) const;

 private:
  FieldPtr small_, big_;
  std::vector<FieldElem> basis_images_;  // images of X^i, i < k
};

Embedding embed_subfield(FieldPtr small, FieldPtr big);

/// (e, f) with e^2 + f^2 = -1: e is the first element in code order for which
/// -1 - e^2 is a square, f the smaller root. Throws for characteristic 2.
std::pair<FieldElem, FieldElem> sum_of_two_squares_minus_one(const Field& F);

}  // namespace nilprim
