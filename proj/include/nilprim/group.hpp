#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "nilprim/matrix.hpp"

namespace nilprim {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// Breadth-first multiplicative closure of the generators (identity first).
/// Throws CapExceeded if the group has more than cap elements.
std::vector<Matrix> close(const std::vector<Matrix>& gens, std::size_t cap = kDefaultClosureCap);

/// Closed element list of a finite matrix group plus index arithmetic on it.
/// Element 0 is the identity. Immutable once built.
class GroupIndex {
 public:
  GroupIndex(FieldPtr F, int n, const std::vector<Matrix>& gens, std::size_t cap);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(std::uint32_t i) const { return elements_[i]; }
  std::optional<std::uint32_t> find(const Matrix& m) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::uint64_t e) const;
  std::uint64_t order_of(std::uint32_t a) const;
  /// Indices of the generators used to build the closure.
  const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }

 private:
  void ensure_orders() const;

  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> map_;
  std::vector<std::uint32_t> parent_, via_;  // element i = element parent_[i] * gen via_[i]
  std::vector<std::uint32_t> right_;         // right_[i * ngens + g]
  std::vector<std::uint32_t> table_;         // full table for small groups
  std::vector<std::uint32_t> gen_idx_;
  std::size_t ngens_ = 0;

  mutable std::once_flag orders_once_;
  mutable std::vector<std::uint64_t> orders_;
  mutable std::vector<std::uint32_t> inverses_;
};

/// A finite subgroup of GL(n, F) given by generators; the element closure is
/// computed on first use and shared between copies.
class MatrixGroup {
 public:
  MatrixGroup(FieldPtr F, int n, std::vector<Matrix> gens);
  /// Non-empty generator list; field and degree taken from it.
  explicit MatrixGroup(std::vector<Matrix> gens);

  const std::vector<Matrix>& generators() const { return gens_; }
  int degree() const { return n_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  const GroupIndex& index(std::size_t cap = kDefaultClosureCap) const;
  const std::vector<Matrix>& elements(std::size_t cap = kDefaultClosureCap) const { return index(cap).elements(); }
  std::size_t order(std::size_t cap = kDefaultClosureCap) const { return index(cap).size(); }
  bool contains(const Matrix& m) const { return index().find(m).has_value(); }
  bool is_abelian() const;

  /// x^-1 G x.
  MatrixGroup conjugated_by(const Matrix& x) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const GroupIndex> index;
  };

  FieldPtr field_;
  int n_;
  std::vector<Matrix> gens_;
  std::shared_ptr<Cache> cache_;
};

/// A subgroup of an indexed group, as an element bitset.
struct Subgroup {
  std::vector<std::uint64_t> bits;
  std::vector<std::uint32_t> gens;
  std::size_t order = 0;

  bool contains(std::uint32_t i) const { return (bits[i >> 6] >> (i & 63)) & 1U; }
  bool operator==(const Subgroup& o) const { return bits == o.bits; }
  std::vector<std::uint32_t> members() const;
};

Subgroup subgroup_closure(const GroupIndex& G, std::span<const std::uint32_t> gens);

/// Every subgroup, found by cyclic extension. Sorted by order, then bitset.
/// Throws CapExceeded when |G| > cap.
std::vector<Subgroup> all_subgroups(const GroupIndex& G, std::size_t cap = 10000);

bool is_normal(const GroupIndex& G, const Subgroup& H);
bool is_cyclic(const GroupIndex& G, const Subgroup& H);
bool is_abelian(const GroupIndex& G, const Subgroup& H);

/// Subgroup as a matrix group, with a reduced generating set.
MatrixGroup to_matrix_group(const GroupIndex& G, const Subgroup& H, FieldPtr F, int n);

/// Drops generators that lie in the span of the earlier ones.
std::vector<std::uint32_t> reduce_generators(const GroupIndex& G, std::span<const std::uint32_t> gens);

/// Greedy small generating set of H: largest-order elements first.
std::vector<std::uint32_t> small_generating_set(const GroupIndex& G, const Subgroup& H);

}  // namespace nilprim
