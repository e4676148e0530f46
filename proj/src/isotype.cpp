#include "nilprim/isotype.hpp"

#include <algorithm>

#include "nilprim/error.hpp"
#include "nilprim/numtheory.hpp"

namespace nilprim {

std::string_view to_string(Sylow2Kind k) {
  switch (k) {
    case Sylow2Kind::trivial: return "trivial";
    case Sylow2Kind::cyclic: return "cyclic";
    case Sylow2Kind::quaternion8: return "quaternion8";
    case Sylow2Kind::generalised_quaternion: return "generalised_quaternion";
    case Sylow2Kind::dihedral: return "dihedral";
    case Sylow2Kind::semidihedral: return "semidihedral";
  }
  return "?";
}

Sylow2Kind parse_sylow2_kind(std::string_view s) {
  if (s == "trivial") return Sylow2Kind::trivial;
  if (s == "cyclic" || s == "c") return Sylow2Kind::cyclic;
  if (s == "quaternion8" || s == "q8") return Sylow2Kind::quaternion8;
  if (s == "generalised_quaternion" || s == "gq") return Sylow2Kind::generalised_quaternion;
  if (s == "dihedral" || s == "dh" || s == "d") return Sylow2Kind::dihedral;
  if (s == "semidihedral" || s == "sd") return Sylow2Kind::semidihedral;
  throw InvalidArgument("unknown Sylow 2-subgroup kind '" + std::string(s) + "'");
}

std::string describe(const IsoType& t) {
  std::string s;
  switch (t.sylow2_kind) {
    case Sylow2Kind::trivial: break;
    case Sylow2Kind::cyclic: s = "C" + std::to_string(t.sylow2_order); break;
    case Sylow2Kind::quaternion8: s = "Q8"; break;
    case Sylow2Kind::generalised_quaternion: s = "Q" + std::to_string(t.sylow2_order); break;
    case Sylow2Kind::dihedral: s = "D" + std::to_string(t.sylow2_order); break;
    case Sylow2Kind::semidihedral: s = "SD" + std::to_string(t.sylow2_order); break;
  }
  if (t.odd_order > 1) s += (s.empty() ? "" : " x ") + std::string("C") + std::to_string(t.odd_order);
  return s.empty() ? "1" : s;
}

void validate(const IsoType& t) {
  const auto pow2 = [](std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; };
  if (!pow2(t.sylow2_order)) throw InvalidArgument("Sylow 2-order must be a power of 2");
  if (t.odd_order % 2 == 0) throw InvalidArgument("odd part must have odd order");
  switch (t.sylow2_kind) {
    case Sylow2Kind::trivial:
      if (t.sylow2_order != 1) throw InvalidArgument("trivial Sylow 2-subgroup must have order 1");
      break;
    case Sylow2Kind::cyclic:
      if (t.sylow2_order < 2) throw InvalidArgument("cyclic Sylow 2-subgroup needs order >= 2");
      break;
    case Sylow2Kind::quaternion8:
      if (t.sylow2_order != 8) throw InvalidArgument("Q8 has order 8");
      break;
    default:
      if (t.sylow2_order < 16) throw InvalidArgument("maximal class 2-groups other than Q8 need order >= 16");
  }
}

bool is_nilpotent(const GroupIndex& G) {
  const std::uint64_t N = G.size();
  for (auto [r, e] : nt::factorize(N)) {
    const std::uint64_t part = nt::ipow(r, static_cast<unsigned>(e));
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < N; ++x) {
      std::uint64_t o = G.order_of(x);
      while (o % r == 0) o /= r;
      if (o == 1) ++count;
    }
    if (count != part) return false;
  }
  return true;
}

namespace {

Subgroup members_subgroup(const GroupIndex& G, const std::vector<std::uint32_t>& members) {
  Subgroup S;
  S.bits.assign((G.size() + 63) / 64, 0);
  for (auto x : members) S.bits[x >> 6] |= std::uint64_t{1} << (x & 63);
  S.order = members.size();
  return S;
}

// Elements of 2-power order and of odd order; the identity lies in both.
void split_2_odd(const GroupIndex& G, std::vector<std::uint32_t>& two, std::vector<std::uint32_t>& odd) {
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    const std::uint64_t o = G.order_of(x);
    if (o % 2 == 1) odd.push_back(x);
    if ((o & (o - 1)) == 0) two.push_back(x);
  }
}

// Least element under the canonical matrix order among candidates.
std::uint32_t least_key(const GroupIndex& G, const std::vector<std::uint32_t>& cands) {
  return *std::min_element(cands.begin(), cands.end(), [&](std::uint32_t x, std::uint32_t y) {
    return G.element(x).key_less(G.element(y));
  });
}

}  // namespace

FamilyStructure analyze_family(const GroupIndex& G) {
  if (!is_nilpotent(G)) throw NotInFamily("group is not nilpotent");
  FamilyStructure fs;
  std::vector<std::uint32_t> two, odd;
  split_2_odd(G, two, odd);

  fs.odd = members_subgroup(G, odd);
  std::vector<std::uint32_t> odd_gens;
  for (auto x : odd)
    if (G.order_of(x) == odd.size()) odd_gens.push_back(x);
  if (odd_gens.empty()) throw NotInFamily("odd part is not cyclic");
  fs.c = least_key(G, odd_gens);
  fs.odd.gens = fs.c == 0 ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{fs.c};
  fs.isotype.odd_order = odd.size();

  const std::uint64_t s = two.size();
  fs.sylow2 = members_subgroup(G, two);
  fs.isotype.sylow2_order = s;
  std::uint64_t best = 0;
  for (auto x : two) best = std::max(best, G.order_of(x));
  std::vector<std::uint32_t> tops;
  for (auto x : two)
    if (G.order_of(x) == best) tops.push_back(x);
  fs.a = least_key(G, tops);

  if (best == s) {
    fs.isotype.sylow2_kind = s == 1 ? Sylow2Kind::trivial : Sylow2Kind::cyclic;
    fs.sylow2.gens = s == 1 ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{fs.a};
    return fs;
  }
  if (best * 2 != s) throw NotInFamily("Sylow 2-subgroup has no cyclic subgroup of index 2");

  const std::uint32_t a_gen[] = {fs.a};
  const Subgroup A = subgroup_closure(G, a_gen);
  std::vector<std::uint32_t> outside;
  for (auto x : two)
    if (!A.contains(x)) outside.push_back(x);
  const std::uint32_t g = least_key(G, outside);
  fs.g = g;
  fs.sylow2.gens = {fs.a, g};

  const std::uint32_t conj = G.mul(G.mul(G.inv(g), fs.a), g);
  std::uint64_t r = 0;
  std::uint32_t pw = 0;
  for (std::uint64_t e = 1; e < best; ++e) {
    pw = G.mul(pw, fs.a);
    if (pw == conj) {
      r = e;
      break;
    }
  }
  if (r == 0) throw NotInFamily("outside element does not normalise the cyclic subgroup");

  if (s == 4) throw NotInFamily("Sylow 2-subgroup is abelian but not cyclic");
  if (r == best - 1) {
    const std::uint32_t g2 = G.mul(g, g);
    if (g2 == 0) {
      fs.isotype.sylow2_kind = Sylow2Kind::dihedral;
    } else if (g2 == G.power(fs.a, best / 2)) {
      fs.isotype.sylow2_kind = s == 8 ? Sylow2Kind::quaternion8 : Sylow2Kind::generalised_quaternion;
    } else {
      throw NotInFamily("inverting element squares outside the centre");
    }
    return fs;
  }
  if (r == 1) throw NotInFamily("Sylow 2-subgroup is abelian but not cyclic");
  if (best >= 8 && r == best / 2 - 1) {
    fs.isotype.sylow2_kind = Sylow2Kind::semidihedral;
    return fs;
  }
  throw NotInFamily("Sylow 2-subgroup is a modular 2-group, not of maximal class");
}

IsoType recognize_isotype(const MatrixGroup& G) { return analyze_family(G.index()).isotype; }

std::pair<MatrixGroup, MatrixGroup> decompose_2_odd(const MatrixGroup& G) {
  const GroupIndex& idx = G.index();
  if (!is_nilpotent(idx)) throw NotInFamily("group is not nilpotent");
  std::vector<std::uint32_t> two, odd;
  split_2_odd(idx, two, odd);
  std::vector<std::uint32_t> odd_gens;
  for (auto x : odd)
    if (idx.order_of(x) == odd.size()) odd_gens.push_back(x);
  if (odd_gens.empty()) throw NotInFamily("odd part is not cyclic");
  const std::uint32_t c = least_key(idx, odd_gens);

  const Subgroup S = members_subgroup(idx, two);
  MatrixGroup sylow = to_matrix_group(idx, S, G.field_ptr(), G.degree());
  std::vector<Matrix> cg;
  if (c != 0) cg.push_back(idx.element(c));
  return {std::move(sylow), MatrixGroup(G.field_ptr(), G.degree(), std::move(cg))};
}

Subgroup derived_subgroup_of(const GroupIndex& idx) {
  const auto& gens = idx.generator_indices();
  std::vector<std::uint32_t> dgens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const std::uint32_t x = gens[i], y = gens[j];
      const std::uint32_t comm = idx.mul(idx.mul(idx.inv(x), idx.inv(y)), idx.mul(x, y));
      if (comm != 0) dgens.push_back(comm);
    }
  Subgroup D = subgroup_closure(idx, dgens);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto g : gens) {
      for (auto d : D.members()) {
        const std::uint32_t c = idx.mul(idx.mul(idx.inv(g), d), g);
        if (!D.contains(c)) {
          dgens.push_back(c);
          D = subgroup_closure(idx, dgens);
          grew = true;
        }
      }
    }
  }
  return D;
}

MatrixGroup derived_subgroup(const MatrixGroup& G) {
  const GroupIndex& idx = G.index();
  return to_matrix_group(idx, derived_subgroup_of(idx), G.field_ptr(), G.degree());
}

Subgroup whole_group(const GroupIndex& G) {
  std::vector<std::uint32_t> all(G.size());
  for (std::uint32_t i = 0; i < G.size(); ++i) all[i] = i;
  Subgroup S = members_subgroup(G, all);
  S.gens = G.generator_indices();
  return S;
}

}  // namespace nilprim
