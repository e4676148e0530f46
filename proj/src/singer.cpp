#include "nilprim/singer.hpp"

#include "nilprim/error.hpp"
#include "nilprim/linalg.hpp"
#include "nilprim/numtheory.hpp"

namespace nilprim {

Matrix companion_matrix(FieldPtr F, const std::vector<FieldElem>& low_coeffs) {
  const int n = static_cast<int>(low_coeffs.size());
  Matrix m(F, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = F->one();
  for (int j = 0; j < n; ++j) m.at(n - 1, j) = F->neg(low_coeffs[static_cast<std::size_t>(j)]);
  return m;
}

std::vector<FieldElem> primitive_minimal_polynomial(int n, const FieldPtr& F) {
  if (n < 1) throw InvalidArgument("degree must be positive");
  if (n == 1) return {F->neg(F->primitive())};
  const FieldPtr E = make_field(F->characteristic(), F->degree() * n);
  const Embedding emb(F, E);
  const FieldElem theta = E->primitive();
  // prod_{j<n} (X - theta^(q^j)), coefficients little-endian
  std::vector<FieldElem> poly{E->one()};
  FieldElem conj = theta;
  for (int j = 0; j < n; ++j) {
    std::vector<FieldElem> next(poly.size() + 1, E->zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = E->add(next[i + 1], poly[i]);
      next[i] = E->sub(next[i], E->mul(conj, poly[i]));
    }
    poly = std::move(next);
    conj = E->pow(conj, F->size());
  }
  std::vector<FieldElem> low;
  for (int i = 0; i < n; ++i) {
    auto c = emb.preimage(poly[static_cast<std::size_t>(i)]);
    if (!c) throw InvalidArgument("minimal polynomial coefficient outside the base field");
    low.push_back(*c);
  }
  return low;
}

Matrix singer_cycle(int n, const FieldPtr& F) { return companion_matrix(F, primitive_minimal_polynomial(n, F)); }

EnvelopingAlgebra enveloping_algebra(FieldPtr F, int n, const std::vector<Matrix>& gens) {
  EnvelopingAlgebra alg{F, n, {}};
  EchelonBasis span(F, static_cast<std::size_t>(n * n));
  const Matrix one = Matrix::identity(F, n);
  span.insert(flatten(one));
  alg.basis.push_back(one);
  for (std::size_t i = 0; i < alg.basis.size(); ++i) {
    for (const auto& g : gens) {
      Matrix prod = alg.basis[i] * g;
      if (span.insert(flatten(prod))) alg.basis.push_back(std::move(prod));
    }
  }
  return alg;
}

std::size_t enveloping_dimension(const MatrixGroup& G) {
  return enveloping_algebra(G.field_ptr(), G.degree(), G.generators()).dimension();
}

std::uint64_t singer_order(int n, std::uint64_t q) {
  if (n < 1) throw InvalidArgument("degree must be positive");
  return nt::ipow(q, static_cast<unsigned>(n)) - 1;
}

namespace {

void require_divides_singer(std::uint64_t d, int n, std::uint64_t q) {
  const std::uint64_t s = singer_order(n, q);
  if (d == 0 || s % d != 0)
    throw InvalidArgument(std::to_string(d) + " does not divide " + std::to_string(q) + "^" + std::to_string(n) + " - 1");
}

}  // namespace

bool is_irreducible_cyclic(std::uint64_t d, int n, std::uint64_t q) {
  require_divides_singer(d, n, q);
  for (auto m : nt::divisors(static_cast<std::uint64_t>(n))) {
    if (m == static_cast<std::uint64_t>(n)) continue;
    if (singer_order(static_cast<int>(m), q) % d == 0) return false;
  }
  return true;
}

bool is_imprimitive_cyclic(std::uint64_t d, int n, std::uint64_t q) {
  if (!is_irreducible_cyclic(d, n, q)) throw InvalidArgument("imprimitivity criterion needs an irreducible order");
  for (auto k : nt::prime_divisors(static_cast<std::uint64_t>(n))) {
    const std::uint64_t bound = k * singer_order(static_cast<int>(static_cast<std::uint64_t>(n) / k), q);
    if (bound % d == 0) return true;
  }
  return false;
}

bool is_primitive_cyclic(std::uint64_t d, int n, std::uint64_t q) {
  return is_irreducible_cyclic(d, n, q) && !is_imprimitive_cyclic(d, n, q);
}

std::vector<std::string> cyclic_criterion_trace(std::uint64_t d, int n, std::uint64_t q) {
  std::vector<std::string> out;
  const std::string ds = std::to_string(d), qs = std::to_string(q);
  for (auto m : nt::divisors(static_cast<std::uint64_t>(n))) {
    if (m == static_cast<std::uint64_t>(n)) continue;
    const auto s = singer_order(static_cast<int>(m), q);
    out.push_back(ds + (s % d == 0 ? " | " : " !| ") + qs + "^" + std::to_string(m) + "-1=" + std::to_string(s));
  }
  if (!is_irreducible_cyclic(d, n, q)) return out;
  for (auto k : nt::prime_divisors(static_cast<std::uint64_t>(n))) {
    const auto b = k * singer_order(static_cast<int>(static_cast<std::uint64_t>(n) / k), q);
    out.push_back(ds + (b % d == 0 ? " | " : " !| ") + std::to_string(k) + "*(" + qs + "^" +
                  std::to_string(static_cast<std::uint64_t>(n) / k) + "-1)=" + std::to_string(b));
  }
  return out;
}

MatrixGroup canonical_abelian(std::uint64_t d, int n, const FieldPtr& F) {
  const std::uint64_t q = F->size();
  if (!is_irreducible_cyclic(d, n, q))
    throw InvalidArgument("order " + std::to_string(d) + " is not irreducible in degree " + std::to_string(n));
  return singer_subgroup(d, n, F);
}

MatrixGroup singer_subgroup(std::uint64_t d, int n, const FieldPtr& F) {
  require_divides_singer(d, n, F->size());
  const Matrix S = singer_cycle(n, F);
  return MatrixGroup(F, n, {pow(S, singer_order(n, F->size()) / d)});
}

Matrix singer_normalizer_frobenius(int n, const FieldPtr& F) {
  if (n < 2) throw InvalidArgument("Frobenius normaliser needs n >= 2");
  const Matrix S = singer_cycle(n, F);
  const Matrix Sq = pow(S, F->size());
  // Row i: coordinates of theta^(i q), which is row 0 of S^(i q).
  Matrix g(F, n);
  Matrix cur = Matrix::identity(F, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.at(i, j) = cur(0, j);
    cur = cur * Sq;
  }
  return g;
}

}  // namespace nilprim
