#include "nilprim/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nilprim/error.hpp"
#include "nilprim/kernels.hpp"
#include "nilprim/numtheory.hpp"
#include "nilprim/singer.hpp"

namespace nilprim {

bool Subspace::contains(const Vec& v) const {
  EchelonBasis b(field, static_cast<std::size_t>(n));
  for (const auto& r : basis) b.insert(r);
  return b.contains(v);
}

Subspace Subspace::image(const Matrix& m) const {
  std::vector<Vec> imgs;
  imgs.reserve(basis.size());
  for (const auto& r : basis) imgs.push_back(m.apply(r));
  return make_subspace(field, n, imgs);
}

std::vector<std::uint32_t> Subspace::key() const {
  std::vector<std::uint32_t> k{static_cast<std::uint32_t>(basis.size())};
  for (const auto& r : basis)
    for (auto x : r) k.push_back(x.code);
  return k;
}

Subspace make_subspace(FieldPtr F, int n, const std::vector<Vec>& spanning) {
  EchelonBasis b(F, static_cast<std::size_t>(n));
  for (const auto& v : spanning) b.insert(v);
  return Subspace{std::move(F), n, b.rows()};
}

Subspace spin(const Vec& v, const std::vector<Matrix>& gens, FieldPtr F, int n) {
  EchelonBasis span(F, static_cast<std::size_t>(n));
  if (!span.insert(v)) throw InvalidArgument("cannot spin the zero vector");
  std::vector<Vec> queue{v};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Vec w = g.apply(queue[i]);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  return Subspace{std::move(F), n, span.rows()};
}

std::uint64_t sweep_size(std::uint64_t q, int n, SweepMode mode) {
  const std::uint64_t all = nt::ipow(q, static_cast<unsigned>(n)) - 1;
  return mode == SweepMode::full ? all : all / (q - 1);
}

Vec sweep_vector(const Field& F, int n, std::uint64_t i, SweepMode mode) {
  const std::uint64_t q = F.size();
  Vec v(static_cast<std::size_t>(n), F.zero());
  if (mode == SweepMode::full) {
    std::uint64_t c = i + 1;
    for (int j = 0; j < n; ++j, c /= q) v[static_cast<std::size_t>(j)] = FieldElem{static_cast<std::uint32_t>(c % q)};
    return v;
  }
  // lines grouped by the position of the leading 1
  for (int lead = 0; lead < n; ++lead) {
    const std::uint64_t block = nt::ipow(q, static_cast<unsigned>(n - 1 - lead));
    if (i < block) {
      v[static_cast<std::size_t>(lead)] = F.one();
      for (int j = lead + 1; j < n; ++j, i /= q) v[static_cast<std::size_t>(j)] = FieldElem{static_cast<std::uint32_t>(i % q)};
      return v;
    }
    i -= block;
  }
  throw InvalidArgument("sweep index out of range");
}

SweepResult irreducibility_sweep(const MatrixGroup& G, SweepMode mode, std::uint64_t cap) {
  const std::uint64_t total = sweep_size(G.field().size(), G.degree(), mode);
  if (total > cap) throw CapExceeded("sweep of " + std::to_string(total) + " vectors exceeds cap");
  return kernels::sweep_parallel(G.generators(), G.field_ptr(), G.degree(), mode);
}

bool is_irreducible_bruteforce(const MatrixGroup& G, SweepMode mode, std::uint64_t cap) {
  return irreducibility_sweep(G, mode, cap).irreducible;
}

namespace {

std::vector<std::vector<std::uint32_t>> system_key(const std::vector<Subspace>& comps) {
  std::vector<std::vector<std::uint32_t>> k;
  for (const auto& c : comps) k.push_back(c.key());
  std::sort(k.begin(), k.end());
  return k;
}

// G-orbit of U under the generators, or nullopt once it grows past limit.
std::optional<std::vector<Subspace>> orbit(const Subspace& U, const std::vector<Matrix>& gens, std::size_t limit) {
  std::vector<Subspace> orb{U};
  std::map<std::vector<std::uint32_t>, std::size_t> seen{{U.key(), 0}};
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto& g : gens) {
      Subspace W = orb[i].image(g);
      if (seen.emplace(W.key(), orb.size()).second) {
        if (orb.size() == limit) return std::nullopt;
        orb.push_back(std::move(W));
      }
    }
  return orb;
}

}  // namespace

std::vector<BlockSystem> find_block_systems(const MatrixGroup& G, std::size_t group_cap, std::uint64_t sweep_cap) {
  const FieldPtr& F = G.field_ptr();
  const int n = G.degree();
  if (sweep_size(F->size(), n, SweepMode::lines) > sweep_cap) throw CapExceeded("block-system sweep exceeds cap");
  if (!is_irreducible_bruteforce(G, SweepMode::lines, sweep_cap))
    throw InvalidArgument("block systems are only defined for irreducible groups");
  const GroupIndex& idx = G.index(group_cap);
  const auto subgroups = all_subgroups(idx, group_cap);

  std::vector<BlockSystem> out;
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  for (auto k : nt::divisors(static_cast<std::uint64_t>(n))) {
    if (k == 1 || idx.size() % k != 0) continue;
    const std::size_t dim = static_cast<std::size_t>(n) / k;
    for (const auto& K : subgroups) {
      if (K.order * k != idx.size()) continue;
      std::vector<Matrix> kgens;
      for (auto i : small_generating_set(idx, K)) kgens.push_back(idx.element(i));
      if (kgens.empty()) kgens.push_back(Matrix::identity(F, n));
      for (auto& U : kernels::submodules_of_dim_parallel(kgens, F, n, dim)) {
        auto orb = orbit(U, G.generators(), k);
        if (!orb || orb->size() != k) continue;
        std::vector<Vec> all;
        for (const auto& W : *orb) all.insert(all.end(), W.basis.begin(), W.basis.end());
        if (rank_of(F, all, static_cast<std::size_t>(n)) != static_cast<std::size_t>(n)) continue;
        auto key = system_key(*orb);
        if (!seen.insert(key).second) continue;

        BlockSystem sys;
        std::sort(orb->begin(), orb->end(), [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
        sys.components = std::move(*orb);
        for (const auto& g : G.generators()) {
          std::vector<std::size_t> perm;
          for (const auto& W : sys.components) {
            const auto img = W.image(g).key();
            for (std::size_t j = 0; j < sys.components.size(); ++j)
              if (sys.components[j].key() == img) {
                perm.push_back(j);
                break;
              }
          }
          sys.action.push_back(std::move(perm));
        }
        out.push_back(std::move(sys));
      }
    }
  }
  return out;
}

bool is_absolutely_irreducible(const MatrixGroup& G) {
  return enveloping_dimension(G) == static_cast<std::size_t>(G.degree() * G.degree());
}

std::size_t centralizer_dimension(const std::vector<Matrix>& gens, FieldPtr F, int n) {
  const auto N = static_cast<std::size_t>(n * n);
  std::vector<Vec> rows;
  // entry (i,j) of X g - g X in the unknowns X_ab, variable index a*n+b
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec row(N, F->zero());
        for (int k = 0; k < n; ++k) {
          auto& xr = row[static_cast<std::size_t>(i * n + k)];
          xr = F->add(xr, g(k, j));
          auto& xl = row[static_cast<std::size_t>(k * n + j)];
          xl = F->sub(xl, g(i, k));
        }
        rows.push_back(std::move(row));
      }
  return N - rank_of(F, rows, N);
}

std::size_t centralizer_dimension(const MatrixGroup& G) {
  return centralizer_dimension(G.generators(), G.field_ptr(), G.degree());
}

std::optional<Matrix> conjugacy_search(const MatrixGroup& G, const MatrixGroup& H, const ConjugacyOptions& opts) {
  if (G.degree() != H.degree() || !G.field().same_as(H.field()))
    throw InvalidArgument("groups must share degree and field");
  if (G.order() != H.order()) return std::nullopt;
  const auto problem = kernels::prepare_conjugacy(G, H, opts.invertible_scan_cap);
  auto X = opts.parallel ? kernels::conjugacy_parallel(problem, opts.node_budget)
                         : kernels::conjugacy_serial(problem, opts.node_budget);
  if (X) {
    const MatrixGroup conj = G.conjugated_by(*X);
    for (const auto& g : conj.generators())
      if (!H.contains(g)) throw std::logic_error("conjugacy witness does not map G into H");
  }
  return X;
}

}  // namespace nilprim
