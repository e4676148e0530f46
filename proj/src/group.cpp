#include "nilprim/group.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "nilprim/error.hpp"

namespace nilprim {

namespace {

constexpr std::size_t kTableLimit = 2048;

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::vector<Matrix> close(const std::vector<Matrix>& gens, std::size_t cap) {
  if (gens.empty()) throw InvalidArgument("closure needs at least one generator");
  return GroupIndex(gens.front().field_ptr(), gens.front().degree(), gens, cap).elements();
}

GroupIndex::GroupIndex(FieldPtr F, int n, const std::vector<Matrix>& gens, std::size_t cap) : ngens_(gens.size()) {
  elements_.push_back(Matrix::identity(F, n));
  map_.emplace(elements_.front(), 0);
  parent_.push_back(0);
  via_.push_back(0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t g = 0; g < ngens_; ++g) {
      Matrix prod = elements_[i] * gens[g];
      auto it = map_.find(prod);
      std::uint32_t idx;
      if (it == map_.end()) {
        if (elements_.size() >= cap) throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
        idx = static_cast<std::uint32_t>(elements_.size());
        map_.emplace(prod, idx);
        elements_.push_back(std::move(prod));
        parent_.push_back(static_cast<std::uint32_t>(i));
        via_.push_back(static_cast<std::uint32_t>(g));
      } else {
        idx = it->second;
      }
      right_.push_back(idx);
    }
  }
  for (std::size_t g = 0; g < ngens_; ++g) gen_idx_.push_back(right_[g]);

  const std::size_t N = elements_.size();
  if (N <= kTableLimit) {
    table_.resize(N * N);
    for (std::size_t i = 0; i < N; ++i) {
      std::uint32_t* row = &table_[i * N];
      row[0] = static_cast<std::uint32_t>(i);
      for (std::size_t j = 1; j < N; ++j) row[j] = right_[row[parent_[j]] * ngens_ + via_[j]];
    }
  }
}

std::optional<std::uint32_t> GroupIndex::find(const Matrix& m) const {
  auto it = map_.find(m);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t GroupIndex::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[std::size_t{a} * elements_.size() + b];
  std::vector<std::uint32_t> word;
  for (std::uint32_t c = b; c != 0; c = parent_[c]) word.push_back(via_[c]);
  std::uint32_t cur = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = right_[std::size_t{cur} * ngens_ + *it];
  return cur;
}

std::uint32_t GroupIndex::power(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 0, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

void GroupIndex::ensure_orders() const {
  std::call_once(orders_once_, [this] {
    const std::size_t N = elements_.size();
    orders_.assign(N, 0);
    inverses_.assign(N, 0);
    for (std::uint32_t a = 0; a < N; ++a) {
      if (!table_.empty()) {
        // walk a, a^2, ... until the identity; the last non-identity power is a^-1
        std::uint64_t k = 1;
        std::uint32_t cur = a, prev = 0;
        while (cur != 0) {
          prev = cur;
          cur = mul(cur, a);
          ++k;
        }
        orders_[a] = k;
        inverses_[a] = prev;
      } else {
        orders_[a] = matrix_order_dividing(elements_[a], N);
        inverses_[a] = *find(*inverse(elements_[a]));
      }
    }
  });
}

std::uint32_t GroupIndex::inv(std::uint32_t a) const {
  ensure_orders();
  return inverses_[a];
}

std::uint64_t GroupIndex::order_of(std::uint32_t a) const {
  ensure_orders();
  return orders_[a];
}

MatrixGroup::MatrixGroup(FieldPtr F, int n, std::vector<Matrix> gens)
    : field_(std::move(F)), n_(n), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.degree() != n_ || !g.field().same_as(*field_))
      throw InvalidArgument("generators must share degree and field");
    if (determinant(g).code == 0) throw InvalidArgument("generator is not invertible");
  }
}

namespace {

const Matrix& first_generator(const std::vector<Matrix>& gens) {
  if (gens.empty()) throw InvalidArgument("empty generator list");
  return gens.front();
}

}  // namespace

MatrixGroup::MatrixGroup(std::vector<Matrix> gens)
    : MatrixGroup(first_generator(gens).field_ptr(), first_generator(gens).degree(), gens) {}

const GroupIndex& MatrixGroup::index(std::size_t cap) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->index) cache_->index = std::make_shared<const GroupIndex>(field_, n_, gens_, cap);
  else if (cache_->index->size() > cap)
    throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
  return *cache_->index;
}

bool MatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

MatrixGroup MatrixGroup::conjugated_by(const Matrix& x) const {
  auto xi = inverse(x);
  if (!xi) throw InvalidArgument("conjugating matrix is singular");
  std::vector<Matrix> gens;
  for (const auto& g : gens_) gens.push_back(*xi * g * x);
  return MatrixGroup(field_, n_, std::move(gens));
}

std::vector<std::uint32_t> Subgroup::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    std::uint64_t word = bits[w];
    while (word) {
      const int b = std::countr_zero(word);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      word &= word - 1;
    }
  }
  return out;
}

Subgroup subgroup_closure(const GroupIndex& G, std::span<const std::uint32_t> gens) {
  Subgroup H;
  H.bits.assign((G.size() + 63) / 64, 0);
  H.gens.assign(gens.begin(), gens.end());
  std::vector<std::uint32_t> queue{0};
  H.bits[0] |= 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      const std::uint32_t y = G.mul(queue[i], g);
      if (!H.contains(y)) {
        H.bits[y >> 6] |= std::uint64_t{1} << (y & 63);
        queue.push_back(y);
      }
    }
  }
  H.order = queue.size();
  return H;
}

std::vector<Subgroup> all_subgroups(const GroupIndex& G, std::size_t cap) {
  if (G.size() > cap) throw CapExceeded("subgroup lattice needs |G| <= " + std::to_string(cap));
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, BitsHash> seen;
  std::vector<Subgroup> all;
  std::vector<Subgroup> cyclic;

  auto add = [&](Subgroup H, std::vector<Subgroup>* frontier) {
    if (seen.contains(H.bits)) return;
    seen.emplace(H.bits, all.size());
    all.push_back(H);
    if (frontier) frontier->push_back(std::move(H));
  };

  for (std::uint32_t x = 0; x < G.size(); ++x) {
    const std::uint32_t gen[] = {x};
    Subgroup C = subgroup_closure(G, x == 0 ? std::span<const std::uint32_t>{} : std::span<const std::uint32_t>(gen));
    if (!seen.contains(C.bits)) cyclic.push_back(C);
    add(std::move(C), nullptr);
  }
  std::vector<Subgroup> frontier = cyclic;
  constexpr std::size_t kMaxSubgroups = 200000;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& H : frontier) {
      for (const auto& C : cyclic) {
        if (C.gens.empty() || H.contains(C.gens.front())) continue;
        std::vector<std::uint32_t> gens = H.gens;
        gens.push_back(C.gens.front());
        add(subgroup_closure(G, gens), &next);
        if (all.size() > kMaxSubgroups) throw CapExceeded("too many subgroups");
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order != b.order ? a.order < b.order : a.bits < b.bits;
  });
  return all;
}

bool is_normal(const GroupIndex& G, const Subgroup& H) {
  for (auto g : G.generator_indices()) {
    const std::uint32_t gi = G.inv(g);
    for (auto h : H.gens)
      if (!H.contains(G.mul(G.mul(gi, h), g))) return false;
  }
  return true;
}

bool is_cyclic(const GroupIndex& G, const Subgroup& H) {
  for (auto x : H.members())
    if (G.order_of(x) == H.order) return true;
  return false;
}

bool is_abelian(const GroupIndex& G, const Subgroup& H) {
  for (std::size_t i = 0; i < H.gens.size(); ++i)
    for (std::size_t j = i + 1; j < H.gens.size(); ++j)
      if (G.mul(H.gens[i], H.gens[j]) != G.mul(H.gens[j], H.gens[i])) return false;
  return true;
}

std::vector<std::uint32_t> reduce_generators(const GroupIndex& G, std::span<const std::uint32_t> gens) {
  std::vector<std::uint32_t> kept;
  Subgroup cur = subgroup_closure(G, kept);
  for (auto g : gens) {
    if (cur.contains(g)) continue;
    kept.push_back(g);
    cur = subgroup_closure(G, kept);
  }
  return kept;
}

std::vector<std::uint32_t> small_generating_set(const GroupIndex& G, const Subgroup& H) {
  auto members = H.members();
  std::stable_sort(members.begin(), members.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return G.order_of(a) > G.order_of(b); });
  std::vector<std::uint32_t> kept;
  Subgroup cur = subgroup_closure(G, kept);
  for (auto x : members) {
    if (cur.order == H.order) break;
    if (cur.contains(x)) continue;
    kept.push_back(x);
    cur = subgroup_closure(G, kept);
  }
  return kept;
}

MatrixGroup to_matrix_group(const GroupIndex& G, const Subgroup& H, FieldPtr F, int n) {
  std::vector<Matrix> gens;
  for (auto i : small_generating_set(G, H)) gens.push_back(G.element(i));
  return MatrixGroup(std::move(F), n, std::move(gens));
}

}  // namespace nilprim
