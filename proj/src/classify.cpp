#include "nilprim/classify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <tuple>

#include <omp.h>

#include "nilprim/construct.hpp"
#include "nilprim/error.hpp"
#include "nilprim/numtheory.hpp"
#include "nilprim/singer.hpp"

namespace nilprim {

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::not_nilpotent: return "not_nilpotent";
    case VerdictKind::reducible: return "reducible";
    case VerdictKind::imprimitive: return "imprimitive";
    case VerdictKind::primitive: return "primitive";
  }
  return "?";
}

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::abelian: return "abelian";
    case CaseTag::deg2: return "deg2";
    case CaseTag::q8_case2: return "q8_case2";
    case CaseTag::case3: return "case3";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view s) {
  if (s == "abelian") return CaseTag::abelian;
  if (s == "deg2") return CaseTag::deg2;
  if (s == "q8_case2") return CaseTag::q8_case2;
  if (s == "case3") return CaseTag::case3;
  throw InvalidArgument("unknown case tag '" + std::string(s) + "'");
}

MatrixGroup ClassRecord::group() const { return MatrixGroup(generators); }

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

Verdict verdict(VerdictKind k, std::vector<std::string> trace) { return Verdict{k, std::move(trace)}; }

// Primitivity of a cyclic group of order d acting in degree n, when d may not
// even divide q^n - 1.
bool cyclic_irreducible(std::uint64_t d, int n, std::uint64_t q) {
  return singer_order(n, q) % d == 0 && is_irreducible_cyclic(d, n, q);
}

}  // namespace

Verdict is_nilpotent_primitive(const MatrixGroup& G, const DecisionOptions& opts) {
  const std::uint64_t q = G.field().size();
  const int n = G.degree();
  if (G.field().characteristic() == 2) throw InvalidArgument("characteristic 2 is not supported");
  std::vector<std::string> trace;
  const GroupIndex& idx = G.index();
  trace.push_back("|G| = " + num(idx.size()));
  if (!is_nilpotent(idx)) {
    trace.push_back("some Sylow subgroup is not normal");
    return verdict(VerdictKind::not_nilpotent, std::move(trace));
  }
  trace.push_back("nilpotent");

  const SweepResult sweep = irreducibility_sweep(G, SweepMode::lines, opts.sweep_cap);
  if (!sweep.irreducible) {
    const Subspace U = spin(*sweep.witness, G.generators(), G.field_ptr(), n);
    trace.push_back("invariant subspace of dimension " + num(U.dim()) + " spun from " +
                    vec_to_string(G.field(), *sweep.witness));
    return verdict(VerdictKind::reducible, std::move(trace));
  }
  trace.push_back("irreducible: " + num(sweep.visited) + " lines spin to the whole space");

  FamilyStructure fs;
  try {
    fs = analyze_family(idx);
  } catch (const NotInFamily& e) {
    trace.push_back(std::string("outside the classified family: ") + e.what());
    if (idx.size() > opts.oracle_group_cap) {
      trace.push_back("too large for the block-system oracle; nilpotent primitive groups lie in the family");
      return verdict(VerdictKind::imprimitive, std::move(trace));
    }
    const auto systems = find_block_systems(G, opts.oracle_group_cap, opts.sweep_cap);
    trace.push_back("block-system oracle: " + num(systems.size()) + " systems");
    return verdict(systems.empty() ? VerdictKind::primitive : VerdictKind::imprimitive, std::move(trace));
  }
  trace.push_back("isotype " + describe(fs.isotype));

  if (!fs.g) {
    const std::uint64_t d = idx.size();
    for (auto& line : cyclic_criterion_trace(d, n, q)) trace.push_back(std::move(line));
    const bool prim = is_primitive_cyclic(d, n, q);
    trace.push_back(prim ? "abelian: primitive by the cyclic criterion" : "abelian: imprimitive by the cyclic criterion");
    return verdict(prim ? VerdictKind::primitive : VerdictKind::imprimitive, std::move(trace));
  }

  const std::uint32_t ac = idx.mul(fs.a, fs.c);
  const std::uint64_t dA = idx.order_of(ac);
  trace.push_back("cyclic index-2 subgroup A = <a c> of order " + num(dA));
  if (!cyclic_irreducible(dA, n, q)) {
    trace.push_back("A is reducible, so G is induced from an index-2 subgroup: imprimitive");
    return verdict(VerdictKind::imprimitive, std::move(trace));
  }
  for (auto& line : cyclic_criterion_trace(dA, n, q)) trace.push_back(std::move(line));
  if (!is_imprimitive_cyclic(dA, n, q)) {
    trace.push_back("A is primitive, hence so is G");
    return verdict(VerdictKind::primitive, std::move(trace));
  }
  trace.push_back("A is irreducible and imprimitive");

  bool ok = true;
  const auto check = [&](bool cond, const std::string& what) {
    trace.push_back((cond ? "holds: " : "fails: ") + what);
    ok = ok && cond;
  };
  check(fs.isotype.sylow2_kind == Sylow2Kind::quaternion8, "Sylow 2-subgroup is Q8");
  const int m = n / 2;
  check(n % 2 == 0 && m % 2 == 1, "n = 2m with m odd");
  if (ok) {
    const Matrix minus = -Matrix::identity(G.field_ptr(), n);
    const Matrix& a = idx.element(fs.a);
    const Matrix& g = idx.element(*fs.g);
    check(a * a == minus && g * g == minus && commutator(a, g) == minus, "a^2 = g^2 = [a,g] = -1");
    const MatrixGroup C(G.field_ptr(), n, fs.c == 0 ? std::vector<Matrix>{} : std::vector<Matrix>{idx.element(fs.c)});
    const std::size_t envC = enveloping_dimension(C);
    check(envC == static_cast<std::size_t>(m), "odd part spans a field of degree m = " + num(m) + " (got " + num(envC) + ")");
    const std::uint64_t dC = fs.isotype.odd_order;
    check(singer_order(m, q) % dC == 0 && is_primitive_cyclic(dC, m, q),
          "odd part of order " + num(dC) + " is primitive in degree " + num(m));
  }
  trace.push_back(ok ? "primitive: Q8 x C branch" : "imprimitive: Q8 x C conditions fail");
  return verdict(ok ? VerdictKind::primitive : VerdictKind::imprimitive, std::move(trace));
}

namespace {

FieldPtr checked_field(int n, std::uint64_t q) {
  if (n < 2) throw InvalidArgument("degree must be at least 2");
  const auto pp = nt::prime_power(q);
  if (!pp) throw InvalidArgument(num(q) + " is not a prime power");
  if (pp->first == 2) throw InvalidArgument("q must be odd");
  singer_order(n, q);
  return make_field_of_size(q);
}

IsoType cyclic_isotype(std::uint64_t d) {
  IsoType t;
  t.odd_order = nt::odd_part(d);
  t.sylow2_order = d / t.odd_order;
  t.sylow2_kind = t.sylow2_order == 1 ? Sylow2Kind::trivial : Sylow2Kind::cyclic;
  return t;
}

struct KindS {
  Sylow2Kind kind;
  int s;
};

std::vector<KindS> degree2_kinds(std::uint64_t q) {
  const int t = sylow2_t(q);
  std::vector<KindS> out{{Sylow2Kind::quaternion8, 3}};
  for (int s = 4; s <= t + 1; ++s) {
    out.push_back({Sylow2Kind::generalised_quaternion, s});
    out.push_back({Sylow2Kind::dihedral, s});
  }
  out.push_back({Sylow2Kind::semidihedral, t + 2});
  return out;
}

std::vector<std::uint64_t> odd_divisors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (auto d : nt::divisors(v))
    if (d % 2 == 1) out.push_back(d);
  return out;
}

OracleCertificate certify_group(const MatrixGroup& G, const DecisionOptions& opts) {
  OracleCertificate c;
  c.irreducible = is_irreducible_bruteforce(G, SweepMode::lines, opts.sweep_cap);
  if (c.irreducible) c.block_systems = find_block_systems(G, opts.oracle_group_cap, opts.sweep_cap).size();
  c.centralizer_dim = centralizer_dimension(G);
  c.enveloping_dim = enveloping_dimension(G);
  return c;
}

bool has_primitive_cyclic_index2(const MatrixGroup& G, const FamilyStructure& fs) {
  const GroupIndex& idx = G.index();
  const std::uint64_t d = idx.order_of(idx.mul(fs.a, fs.c));
  return 2 * d == idx.size() && singer_order(G.degree(), G.field().size()) % d == 0 &&
         is_primitive_cyclic(d, G.degree(), G.field().size());
}

}  // namespace

std::vector<ClassRecord> enumerate_classes(int n, std::uint64_t q, const EnumerateOptions& opts) {
  const FieldPtr F = checked_field(n, q);
  using Task = std::function<std::optional<ClassRecord>()>;
  std::vector<Task> tasks;

  if (!opts.nonabelian_only) {
    for (auto d : nt::divisors(singer_order(n, q))) {
      if (!is_primitive_cyclic(d, n, q)) continue;
      tasks.push_back([=]() -> std::optional<ClassRecord> {
        ClassRecord r{n, q, CaseTag::abelian, cyclic_isotype(d), d, canonical_abelian(d, n, F).generators(),
                      cyclic_criterion_trace(d, n, q), std::nullopt};
        return r;
      });
    }
  }

  const auto nonabelian = [&](CaseTag tag, std::function<MatrixGroup()> build) {
    tasks.push_back([=, &opts]() -> std::optional<ClassRecord> {
      std::optional<MatrixGroup> built;
      try {
        built = build();
      } catch (const InvalidArgument&) {
        return std::nullopt;
      }
      const MatrixGroup& G = *built;
      Verdict v = is_nilpotent_primitive(G, opts.decision);
      if (v.kind != VerdictKind::primitive) return std::nullopt;
      const FamilyStructure fs = analyze_family(G.index());
      ClassRecord r{n, q, tag, fs.isotype, G.order(), G.generators(), std::move(v.trace), std::nullopt};
      if (tag == CaseTag::case3 && !has_primitive_cyclic_index2(G, fs)) r.case_tag = CaseTag::q8_case2;
      return r;
    });
  };

  if (q % 4 == 3 && n == 2) {
    for (auto ks : degree2_kinds(q))
      for (auto c : odd_divisors(q - 1))
        nonabelian(CaseTag::deg2, [=] { return nilprim_gl2(F, ks.kind, ks.s, c); });
  } else if (q % 4 == 3 && n % 2 == 0 && (n / 2) % 2 == 1) {
    const int m = n / 2;
    const std::uint64_t qm = singer_order(m, q) + 1;
    for (auto c : odd_divisors(qm - 1))
      if (is_primitive_cyclic(c, m, q)) nonabelian(CaseTag::q8_case2, [=] { return q8_times_c(m, F, c); });
    if (qm <= (std::uint64_t{1} << 31) && nt::ipow(qm, 2) <= (std::uint64_t{1} << 31)) {
      for (auto ks : degree2_kinds(qm))
        for (auto c : odd_divisors(qm - 1))
          nonabelian(CaseTag::case3, [=] { return nilprim_gl2m(m, F, ks.kind, ks.s, c); });
    } else {
      throw CapExceeded("GF(" + num(qm) + "^2) exceeds the field size cap");
    }
  }

  std::vector<std::optional<ClassRecord>> results(tasks.size());
  std::exception_ptr failure;
  const auto ntasks = static_cast<std::int64_t>(tasks.size());
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < ntasks; ++i) {
    try {
      auto r = tasks[static_cast<std::size_t>(i)]();
      if (r && opts.certify) r->oracle = certify_group(r->group(), opts.decision);
      results[static_cast<std::size_t>(i)] = std::move(r);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassRecord> out;
  for (auto& r : results) {
    if (!r) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const ClassRecord& o) {
      return o.case_tag != CaseTag::abelian && r->case_tag != CaseTag::abelian && o.isotype == r->isotype;
    });
    if (!dup) out.push_back(std::move(*r));
  }
  std::stable_sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
    return std::tuple(a.case_tag, a.isotype.sylow2_order, a.isotype.odd_order, a.isotype.sylow2_kind) <
           std::tuple(b.case_tag, b.isotype.sylow2_order, b.isotype.odd_order, b.isotype.sylow2_kind);
  });
  return out;
}

std::uint64_t count_nonabelian_classes(int n, std::uint64_t q) {
  checked_field(n, q);
  if (q % 4 != 3) return 0;
  if (n == 2) return nt::divisors(q - 1).size() * static_cast<std::uint64_t>(sylow2_t(q) - 1);
  if (n % 2 == 0 && (n / 2) % 2 == 1) {
    EnumerateOptions o;
    o.nonabelian_only = true;
    return enumerate_classes(n, q, o).size();
  }
  return 0;
}

SameClassResult same_class(const MatrixGroup& G, const MatrixGroup& H, bool certify, const ConjugacyOptions& opts) {
  if (G.degree() != H.degree() || !G.field().same_as(H.field()))
    throw InvalidArgument("groups must share degree and field");
  for (const auto* X : {&G, &H})
    if (is_nilpotent_primitive(*X).kind != VerdictKind::primitive)
      throw InvalidArgument("same_class needs nilpotent primitive groups");
  SameClassResult r;
  r.same = recognize_isotype(G) == recognize_isotype(H);
  if (r.same && certify) r.certificate = conjugacy_search(G, H, opts);
  return r;
}

}  // namespace nilprim
