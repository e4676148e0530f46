#pragma once

// Explicit generators for the nilpotent primitive groups of degree 2 and 2m.

#include <cstdint>

#include "nilprim/group.hpp"
#include "nilprim/isotype.hpp"

namespace nilprim {

/// Generators of a semidihedral Sylow 2-subgroup of GL(2, q), q = 3 mod 4:
/// |x| = 2^(t+1), |y| = 2, where 2^t is the exact power of 2 dividing q + 1.
struct Sylow2Gl2 {
  Matrix x;
  Matrix y;
  int t = 0;
};

/// Throws InvalidArgument unless q = 3 mod 4.
Sylow2Gl2 sylow2_gl2(const FieldPtr& F);

/// 2-adic valuation of q + 1.
int sylow2_t(std::uint64_t q);

/// Dihedral or generalised quaternion subgroup of order 2^s inside the
/// Sylow 2-subgroup above, 3 <= s <= t + 1.
MatrixGroup maximal_class_subgroup(const FieldPtr& F, Sylow2Kind kind, int s);

/// G2 x C in GL(2, q) with C the scalars of odd order c_order | q - 1.
/// Admissible G2: Q8 (s = 3 or 0), generalised quaternion or dihedral with
/// 4 <= s <= t + 1, semidihedral with s = t + 2 (or 0).
MatrixGroup nilprim_gl2(const FieldPtr& F, Sylow2Kind kind, int s, std::uint64_t c_order);

/// Q8 x C in GL(2m, q), m odd > 1, where C = <diag(x, x)> and <x> is the
/// canonical cyclic subgroup of order c_order of GL(m, q), which must be
/// odd and primitive. Generators in order: a, g, diag(x, x).
MatrixGroup q8_times_c(int m, const FieldPtr& F, std::uint64_t c_order);

/// Rewrites H <= GL(r, q^s) as a subgroup of GL(rs, q) by replacing each
/// entry with its multiplication matrix over the base field.
MatrixGroup galois_blowup(const MatrixGroup& H, const FieldPtr& base);

/// Blow-up of nilprim_gl2 over GF(q^m) into GL(2m, q). Throws
/// InvalidArgument when the result is reducible over GF(q) or not primitive.
MatrixGroup nilprim_gl2m(int m, const FieldPtr& F, Sylow2Kind kind, int s, std::uint64_t c_order);

}  // namespace nilprim
