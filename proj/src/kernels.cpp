#include "nilprim/kernels.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "nilprim/error.hpp"
#include "nilprim/isotype.hpp"
#include "nilprim/numtheory.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilprim::kernels {

namespace {

// Spin v under gens; stops early (returning dim limit+1 rows) once the span
// exceeds limit.
EchelonBasis spin_bounded(const Vec& v, const std::vector<Matrix>& gens, const FieldPtr& F, int n,
                          std::size_t limit) {
  EchelonBasis span(F, static_cast<std::size_t>(n));
  std::vector<Vec> queue{v};
  span.insert(v);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Vec w = g.apply(queue[i]);
      if (span.insert(w)) {
        if (span.rank() > limit) return span;
        queue.push_back(std::move(w));
      }
    }
  }
  return span;
}

Subspace to_subspace(const EchelonBasis& b, const FieldPtr& F, int n) { return Subspace{F, n, b.rows()}; }

}  // namespace

SweepResult sweep_serial(const std::vector<Matrix>& gens, FieldPtr F, int n, SweepMode mode) {
  const std::uint64_t total = sweep_size(F->size(), n, mode);
  const auto full = static_cast<std::size_t>(n);
  SweepResult res;
  for (std::uint64_t i = 0; i < total; ++i) {
    ++res.visited;
    const Vec v = sweep_vector(*F, n, i, mode);
    if (spin_bounded(v, gens, F, n, full).rank() < full) {
      res.irreducible = false;
      res.witness = v;
      return res;
    }
  }
  return res;
}

SweepResult sweep_parallel(const std::vector<Matrix>& gens, FieldPtr F, int n, SweepMode mode) {
  const std::uint64_t total = sweep_size(F->size(), n, mode);
  const auto full = static_cast<std::size_t>(n);
  std::uint64_t first_bad = std::numeric_limits<std::uint64_t>::max();
  const auto total_signed = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_bad)
  for (std::int64_t i = 0; i < total_signed; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    if (u > first_bad) continue;
    const Vec v = sweep_vector(*F, n, u, mode);
    if (spin_bounded(v, gens, F, n, full).rank() < full) first_bad = std::min(first_bad, u);
  }
  SweepResult res;
  if (first_bad != std::numeric_limits<std::uint64_t>::max()) {
    res.irreducible = false;
    res.witness = sweep_vector(*F, n, first_bad, mode);
    res.visited = first_bad + 1;
  } else {
    res.visited = total;
  }
  return res;
}

std::vector<Subspace> submodules_of_dim_serial(const std::vector<Matrix>& gens, FieldPtr F, int n,
                                               std::size_t target_dim) {
  const std::uint64_t total = sweep_size(F->size(), n, SweepMode::lines);
  std::vector<Subspace> out;
  std::vector<std::vector<std::uint32_t>> keys;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Vec v = sweep_vector(*F, n, i, SweepMode::lines);
    // a vector already inside a found submodule spins into it
    bool covered = false;
    for (const auto& U : out)
      if (U.contains(v)) {
        covered = true;
        break;
      }
    if (covered) continue;
    auto span = spin_bounded(v, gens, F, n, target_dim);
    if (span.rank() != target_dim) continue;
    Subspace U = to_subspace(span, F, n);
    auto key = U.key();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      keys.push_back(std::move(key));
      out.push_back(std::move(U));
    }
  }
  return out;
}

std::vector<Subspace> submodules_of_dim_parallel(const std::vector<Matrix>& gens, FieldPtr F, int n,
                                                 std::size_t target_dim) {
  const std::uint64_t total = sweep_size(F->size(), n, SweepMode::lines);
  const auto total_signed = static_cast<std::int64_t>(total);
  std::vector<std::pair<std::uint64_t, Subspace>> found;
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, Subspace>> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < total_signed; ++i) {
      const auto u = static_cast<std::uint64_t>(i);
      const Vec v = sweep_vector(*F, n, u, SweepMode::lines);
      auto span = spin_bounded(v, gens, F, n, target_dim);
      if (span.rank() == target_dim) local.emplace_back(u, to_subspace(span, F, n));
    }
#pragma omp critical
    for (auto& e : local) found.push_back(std::move(e));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<std::vector<std::uint32_t>, bool> seen;
  std::vector<Subspace> out;
  for (auto& [i, U] : found)
    if (seen.emplace(U.key(), true).second) out.push_back(std::move(U));
  return out;
}

ConjugacyProblem prepare_conjugacy(const MatrixGroup& G, const MatrixGroup& H, std::uint64_t scan_cap) {
  ConjugacyProblem p;
  p.G = &G.index();
  p.H = &H.index();
  p.field = G.field_ptr();
  p.n = G.degree();
  p.invertible_scan_cap = scan_cap;
  p.g_gens = small_generating_set(*p.G, whole_group(*p.G));
  const Subgroup dG = derived_subgroup_of(*p.G);
  const Subgroup dH = derived_subgroup_of(*p.H);
  for (auto g : p.g_gens) {
    std::vector<std::uint32_t> cands;
    for (std::uint32_t h = 0; h < p.H->size(); ++h)
      if (p.H->order_of(h) == p.G->order_of(g) && dH.contains(h) == dG.contains(g)) cands.push_back(h);
    p.candidates.push_back(std::move(cands));
  }
  return p;
}

namespace {

struct Searcher {
  const ConjugacyProblem& p;
  std::uint64_t budget;
  std::atomic<std::uint64_t>* nodes;
  std::vector<std::uint32_t> chosen;

  // Solutions X of g X = X h inside span(basis).
  std::vector<Matrix> restrict(const std::vector<Matrix>& basis, const Matrix& g, const Matrix& h) const {
    const Field& F = *p.field;
    const std::size_t e = static_cast<std::size_t>(p.n * p.n);
    std::vector<Matrix> images;
    images.reserve(basis.size());
    for (const auto& X : basis) images.push_back(g * X - X * h);
    std::vector<Vec> rows(e, Vec(basis.size()));
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (std::size_t r = 0; r < e; ++r) rows[r][t] = images[t].entries()[r];
    std::vector<Matrix> out;
    for (const auto& c : nullspace(F, std::move(rows), basis.size())) {
      Matrix X(p.field, p.n);
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (c[t].code != 0) X = X + basis[t].scaled(c[t]);
      out.push_back(std::move(X));
    }
    return out;
  }

  std::optional<Matrix> first_invertible(const std::vector<Matrix>& basis) const {
    const Field& F = *p.field;
    const std::uint64_t q = F.size();
    std::uint64_t combos = std::numeric_limits<std::uint64_t>::max();
    if (basis.size() < 64) {
      try {
        combos = nt::ipow(q, static_cast<unsigned>(basis.size())) - 1;
      } catch (const InvalidArgument&) {
      }
    }
    const std::uint64_t limit = std::min(combos, p.invertible_scan_cap);
    for (std::uint64_t code = 1; code <= limit; ++code) {
      Matrix X(p.field, p.n);
      std::uint64_t c = code;
      for (std::size_t t = 0; t < basis.size() && c; ++t, c /= q) {
        const FieldElem coef{static_cast<std::uint32_t>(c % q)};
        if (coef.code != 0) X = X + basis[t].scaled(coef);
      }
      if (determinant(X).code != 0) return X;
    }
    if (limit < combos) throw CapExceeded("intertwiner space too large to scan for an invertible element");
    return std::nullopt;
  }

  std::optional<Matrix> dfs(std::size_t level, const std::vector<Matrix>& basis) {
    if (level == p.g_gens.size()) {
      if (subgroup_closure(*p.H, chosen).order != p.H->size()) return std::nullopt;
      return first_invertible(basis);
    }
    for (auto h : p.candidates[level]) {
      if (nodes->fetch_add(1) >= budget) throw CapExceeded("conjugacy search budget exhausted");
      auto next = restrict(basis, p.G->element(p.g_gens[level]), p.H->element(h));
      if (next.empty()) continue;
      chosen.push_back(h);
      auto r = dfs(level + 1, next);
      chosen.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<Matrix> run_from(std::size_t first_candidate) {
    std::vector<Matrix> basis = full_basis();
    if (p.g_gens.empty()) return dfs(0, basis);
    const std::uint32_t h = p.candidates[0][first_candidate];
    if (nodes->fetch_add(1) >= budget) throw CapExceeded("conjugacy search budget exhausted");
    auto next = restrict(basis, p.G->element(p.g_gens[0]), p.H->element(h));
    if (next.empty()) return std::nullopt;
    chosen = {h};
    return dfs(1, next);
  }

  std::vector<Matrix> full_basis() const {
    std::vector<Matrix> basis;
    for (int r = 0; r < p.n; ++r)
      for (int c = 0; c < p.n; ++c) {
        Matrix E(p.field, p.n);
        E.at(r, c) = p.field->one();
        basis.push_back(std::move(E));
      }
    return basis;
  }
};

}  // namespace

std::optional<Matrix> conjugacy_serial(const ConjugacyProblem& p, std::uint64_t node_budget) {
  std::atomic<std::uint64_t> nodes{0};
  Searcher s{p, node_budget, &nodes, {}};
  return s.dfs(0, s.full_basis());
}

std::optional<Matrix> conjugacy_parallel(const ConjugacyProblem& p, std::uint64_t node_budget) {
  if (p.g_gens.empty()) return conjugacy_serial(p, node_budget);
  const auto m = static_cast<std::int64_t>(p.candidates[0].size());
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::int64_t> best{m};
  std::atomic<bool> capped{false};
  std::vector<std::optional<Matrix>> results(static_cast<std::size_t>(m));
  std::vector<char> finished(static_cast<std::size_t>(m), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < m; ++i) {
    if (i > best.load() || capped.load()) continue;
    try {
      Searcher s{p, node_budget, &nodes, {}};
      auto r = s.run_from(static_cast<std::size_t>(i));
      finished[static_cast<std::size_t>(i)] = 1;
      if (r) {
        results[static_cast<std::size_t>(i)] = std::move(r);
        std::int64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (const CapExceeded&) {
      capped = true;
    }
  }
  const std::int64_t b = best.load();
  // A budget overrun only matters if it could hide an earlier witness.
  if (capped && b == m) throw CapExceeded("conjugacy search budget exhausted");
  if (b < m) {
    if (capped) {
      for (std::int64_t i = 0; i < b; ++i)
        if (!finished[static_cast<std::size_t>(i)]) throw CapExceeded("conjugacy search budget exhausted");
    }
    return results[static_cast<std::size_t>(b)];
  }
  return std::nullopt;
}

}  // namespace nilprim::kernels
