#pragma once

// Singer cycles, enveloping algebras and the order criteria that decide
// irreducibility and primitivity of cyclic linear groups.

#include <cstdint>
#include <string>
#include <vector>

#include "nilprim/group.hpp"

namespace nilprim {

/// Companion matrix (row convention) of X^n + c_{n-1} X^{n-1} + ... + c_0,
/// i.e. multiplication by X in the basis 1, X, ..., X^{n-1}.
Matrix companion_matrix(FieldPtr F, const std::vector<FieldElem>& low_coeffs);

/// Low coefficients c_0..c_{n-1} of the minimal polynomial over F of the
/// cached primitive element of GF(q^n).
std::vector<FieldElem> primitive_minimal_polynomial(int n, const FieldPtr& F);

/// Companion matrix of the minimal polynomial of a primitive element of
/// GF(q^n); its order is q^n - 1.
Matrix singer_cycle(int n, const FieldPtr& F);

struct EnvelopingAlgebra {
  FieldPtr base;
  int degree = 0;
  std::vector<Matrix> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// F-span of the group generated by gens, by saturating {1} under right
/// multiplication by the generators.
EnvelopingAlgebra enveloping_algebra(FieldPtr F, int n, const std::vector<Matrix>& gens);
std::size_t enveloping_dimension(const MatrixGroup& G);

/// d must divide q^n - 1 (InvalidArgument otherwise).
bool is_irreducible_cyclic(std::uint64_t d, int n, std::uint64_t q);
/// Requires is_irreducible_cyclic(d, n, q).
bool is_imprimitive_cyclic(std::uint64_t d, int n, std::uint64_t q);
bool is_primitive_cyclic(std::uint64_t d, int n, std::uint64_t q);

/// Human-readable divisibility facts behind the three predicates above.
std::vector<std::string> cyclic_criterion_trace(std::uint64_t d, int n, std::uint64_t q);

/// q^n - 1 with overflow checking.
std::uint64_t singer_order(int n, std::uint64_t q);

/// <S^((q^n-1)/d)> for any d | q^n - 1.
MatrixGroup singer_subgroup(std::uint64_t d, int n, const FieldPtr& F);

/// <S^((q^n-1)/d)>, the representative of the single class of abelian
/// irreducible subgroups of order d.
MatrixGroup canonical_abelian(std::uint64_t d, int n, const FieldPtr& F);

/// g with g^-1 S g = S^q for S = singer_cycle(n, F): the matrix of the q-power
/// map on GF(q^n) in the basis 1, theta, ..., theta^{n-1}.
Matrix singer_normalizer_frobenius(int n, const FieldPtr& F);

}  // namespace nilprim
