#include "nilprim/construct.hpp"

#include "nilprim/classify.hpp"
#include "nilprim/error.hpp"
#include "nilprim/numtheory.hpp"
#include "nilprim/singer.hpp"

namespace nilprim {

namespace {

void require_3_mod_4(std::uint64_t q) {
  if (q % 4 != 3) throw InvalidArgument("q = " + std::to_string(q) + " is not 3 mod 4");
}

Matrix block2(const FieldPtr& F, int m, const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  Matrix out(F, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      out.at(i, j) = a(i, j);
      out.at(i, j + m) = b(i, j);
      out.at(i + m, j) = c(i, j);
      out.at(i + m, j + m) = d(i, j);
    }
  return out;
}

std::string kind_name(Sylow2Kind kind, int s) {
  return std::string(to_string(kind)) + " of order 2^" + std::to_string(s);
}

}  // namespace

int sylow2_t(std::uint64_t q) { return nt::two_adic_valuation(q + 1); }

Sylow2Gl2 sylow2_gl2(const FieldPtr& F) {
  const std::uint64_t q = F->size();
  require_3_mod_4(q);
  const FieldPtr E = make_field(F->characteristic(), 2 * F->degree());
  const Embedding emb(F, E);
  const FieldElem w = E->primitive();
  const FieldElem wq = E->pow(w, q);
  const auto N = emb.preimage(E->mul(w, wq));
  const auto T = emb.preimage(E->add(w, wq));
  if (!N || !T) throw std::logic_error("norm or trace of a generator left the base field");

  Sylow2Gl2 out;
  out.t = sylow2_t(q);
  const Matrix M = companion_matrix(F, {*N, F->neg(*T)});
  out.x = pow(M, (q * q - 1) >> (out.t + 1));
  out.y = Matrix(F, 2);
  out.y.at(0, 0) = F->one();
  out.y.at(1, 0) = *T;
  out.y.at(1, 1) = F->neg(F->one());
  return out;
}

MatrixGroup maximal_class_subgroup(const FieldPtr& F, Sylow2Kind kind, int s) {
  if (kind == Sylow2Kind::quaternion8) {
    if (s != 3 && s != 0) throw InvalidArgument("Q8 has order 2^3");
    kind = Sylow2Kind::generalised_quaternion;
    s = 3;
  }
  if (kind != Sylow2Kind::dihedral && kind != Sylow2Kind::generalised_quaternion)
    throw InvalidArgument("maximal class subgroup must be dihedral or generalised quaternion");
  const auto syl = sylow2_gl2(F);
  if (s < 3 || s > syl.t + 1)
    throw InvalidArgument("order 2^" + std::to_string(s) + " outside 2^3 .. 2^" + std::to_string(syl.t + 1));
  const Matrix x2 = pow(syl.x, std::uint64_t{1} << (syl.t + 2 - s));
  if (kind == Sylow2Kind::dihedral) return MatrixGroup(F, 2, {x2, syl.y});
  return MatrixGroup(F, 2, {x2, syl.x * syl.y});
}

MatrixGroup nilprim_gl2(const FieldPtr& F, Sylow2Kind kind, int s, std::uint64_t c_order) {
  const std::uint64_t q = F->size();
  require_3_mod_4(q);
  if (c_order == 0 || c_order % 2 == 0 || (q - 1) % c_order != 0)
    throw InvalidArgument("odd part order " + std::to_string(c_order) + " must be odd and divide q - 1 = " +
                          std::to_string(q - 1));
  const int t = sylow2_t(q);
  std::vector<Matrix> gens;
  switch (kind) {
    case Sylow2Kind::quaternion8:
      gens = maximal_class_subgroup(F, kind, s).generators();
      break;
    case Sylow2Kind::dihedral:
      if (s == 3) throw InvalidArgument("D8 is monomial, hence imprimitive");
      [[fallthrough]];
    case Sylow2Kind::generalised_quaternion:
      if (s < 4 || s > t + 1)
        throw InvalidArgument(kind_name(kind, s) + " is not admissible: need 4 <= s <= " + std::to_string(t + 1));
      gens = maximal_class_subgroup(F, kind, s).generators();
      break;
    case Sylow2Kind::semidihedral: {
      if (s != 0 && s != t + 2)
        throw InvalidArgument(kind_name(kind, s) + " is not admissible: need s = " + std::to_string(t + 2));
      const auto syl = sylow2_gl2(F);
      gens = {syl.x, syl.y};
      break;
    }
    default:
      throw InvalidArgument("Sylow 2-subgroup must be Q8, generalised quaternion, dihedral or semidihedral");
  }
  if (c_order > 1) gens.push_back(Matrix::scalar(F, 2, F->primitive_power((q - 1) / c_order)));
  return MatrixGroup(F, 2, std::move(gens));
}

MatrixGroup q8_times_c(int m, const FieldPtr& F, std::uint64_t c_order) {
  const std::uint64_t q = F->size();
  require_3_mod_4(q);
  if (m < 3 || m % 2 == 0) throw InvalidArgument("m must be odd and > 1");
  if (c_order % 2 == 0) throw InvalidArgument("odd part order must be odd");
  if (singer_order(m, q) % c_order != 0 || !is_primitive_cyclic(c_order, m, q))
    throw InvalidArgument(std::to_string(c_order) + " is not a primitive cyclic order for GL(" + std::to_string(m) +
                          ", " + std::to_string(q) + ")");
  const Matrix x = canonical_abelian(c_order, m, F).generators().front();
  const Matrix I = Matrix::identity(F, m);
  const Matrix Z(F, m);

  // scan F[x] for e with -1 - e^2 a square, then the least f with f^2 = -1 - e^2
  std::vector<Matrix> xp{I};
  for (int i = 1; i < m; ++i) xp.push_back(xp.back() * x);
  const std::uint64_t size = nt::ipow(q, static_cast<unsigned>(m));
  const auto element = [&](std::uint64_t code) {
    Matrix e(F, m);
    for (int i = 0; i < m && code; ++i, code /= q) {
      const FieldElem c{static_cast<std::uint32_t>(code % q)};
      if (c.code) e = e + xp[static_cast<std::size_t>(i)].scaled(c);
    }
    return e;
  };
  const Matrix minus_one = -I;
  std::optional<Matrix> e, f;
  for (std::uint64_t ce = 0; ce < size && !e; ++ce) {
    const Matrix cand = element(ce);
    const Matrix z = minus_one - cand * cand;
    if (!(z == Z) && !pow(z, (size - 1) / 2).is_identity()) continue;
    for (std::uint64_t cf = 0; cf < size; ++cf) {
      Matrix r = element(cf);
      if (r * r == z) {
        e = cand;
        f = std::move(r);
        break;
      }
    }
  }
  if (!e) throw std::logic_error("no solution of e^2 + f^2 = -1 in F[x]");

  const Matrix a = block2(F, m, Z, I, minus_one, Z);
  const Matrix g = block2(F, m, *e, *f, *f, -*e);
  const Matrix c = block2(F, m, x, Z, Z, x);
  return MatrixGroup(F, 2 * m, {a, g, c});
}

MatrixGroup galois_blowup(const MatrixGroup& H, const FieldPtr& base) {
  const FieldPtr& E = H.field_ptr();
  const std::uint32_t p = E->characteristic();
  const int k = base->degree();
  if (base->characteristic() != p || E->degree() % k != 0)
    throw InvalidArgument("GF(" + std::to_string(E->size()) + ") is not an extension of GF(" +
                          std::to_string(base->size()) + ")");
  const int s = E->degree() / k;
  const int K = E->degree();
  const Embedding emb(base, E);
  const FieldPtr Fp = make_field(p, 1);

  // GF(p)-basis of E: iota(Y^l) w^j at position j k + l, with Y the residue
  // generator of the base and w the primitive element of E
  const FieldElem w = E->primitive();
  std::vector<FieldElem> ypow{E->one()};
  if (k > 1) {
    const FieldElem Y = emb.apply(base->generator_x());
    for (int l = 1; l < k; ++l) ypow.push_back(E->mul(ypow.back(), Y));
  }
  std::vector<FieldElem> wpow{E->one()};
  for (int j = 1; j < s; ++j) wpow.push_back(E->mul(wpow.back(), w));
  Matrix B(Fp, K);
  for (int j = 0; j < s; ++j)
    for (int l = 0; l < k; ++l) {
      const auto c = E->coeffs(E->mul(ypow[static_cast<std::size_t>(l)], wpow[static_cast<std::size_t>(j)]));
      for (int i = 0; i < K; ++i) B.at(j * k + l, i) = FieldElem{c[static_cast<std::size_t>(i)]};
    }
  const auto Binv = inverse(B);
  if (!Binv) throw std::logic_error("powers of the primitive element are not a basis");

  const auto coords = [&](FieldElem y) {
    const auto c = E->coeffs(y);
    Vec v(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) v[static_cast<std::size_t>(i)] = FieldElem{c[static_cast<std::size_t>(i)]};
    const Vec d = Binv->apply(v);
    std::vector<FieldElem> out;
    for (int j = 0; j < s; ++j) {
      std::vector<std::uint32_t> digits;
      for (int l = 0; l < k; ++l) digits.push_back(d[static_cast<std::size_t>(j * k + l)].code);
      out.push_back(base->from_coeffs(digits));
    }
    return out;
  };

  const int r = H.degree();
  std::vector<Matrix> gens;
  for (const auto& h : H.generators()) {
    Matrix out(base, r * s);
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        const FieldElem alpha = h(a, b);
        if (alpha.code == 0) continue;
        for (int j = 0; j < s; ++j) {
          const auto row = coords(E->mul(wpow[static_cast<std::size_t>(j)], alpha));
          for (int l = 0; l < s; ++l) out.at(a * s + j, b * s + l) = row[static_cast<std::size_t>(l)];
        }
      }
    gens.push_back(std::move(out));
  }
  return MatrixGroup(base, r * s, std::move(gens));
}

MatrixGroup nilprim_gl2m(int m, const FieldPtr& F, Sylow2Kind kind, int s, std::uint64_t c_order) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("m must be odd and > 1");
  require_3_mod_4(F->size());
  const FieldPtr E = make_field(F->characteristic(), F->degree() * m);
  MatrixGroup G = galois_blowup(nilprim_gl2(E, kind, s, c_order), F);
  if (enveloping_dimension(G) != static_cast<std::size_t>(4 * m))
    throw InvalidArgument("blow-up is reducible over GF(" + std::to_string(F->size()) +
                          "): the degree-2 group is realisable over a proper subfield");
  const Verdict v = is_nilpotent_primitive(G);
  if (v.kind != VerdictKind::primitive)
    throw InvalidArgument("blow-up is " + std::string(to_string(v.kind)) + " in GL(" + std::to_string(2 * m) + ", " +
                          std::to_string(F->size()) + ")");
  return G;
}

}  // namespace nilprim
