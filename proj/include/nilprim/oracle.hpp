#pragma once

// Brute-force verifiers. These never consult the order criteria; they are the
// ground truth the criteria are tested against.

#include <cstdint>
#include <optional>
#include <vector>

#include "nilprim/group.hpp"
#include "nilprim/linalg.hpp"

namespace nilprim {

/// A subspace of F^n in reduced echelon form (unique per subspace).
struct Subspace {
  FieldPtr field;
  int n = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const;
  /// Image under v -> v M.
  Subspace image(const Matrix& m) const;
  std::vector<std::uint32_t> key() const;
  bool operator==(const Subspace& o) const { return key() == o.key(); }
};

Subspace make_subspace(FieldPtr F, int n, const std::vector<Vec>& spanning);

/// Smallest subspace containing v and invariant under every generator.
Subspace spin(const Vec& v, const std::vector<Matrix>& gens, FieldPtr F, int n);

enum class SweepMode { lines, full };

inline constexpr std::uint64_t kSweepCap = 10'000'000;

/// Number of vectors a sweep visits: (q^n-1)/(q-1) lines or q^n-1 vectors.
std::uint64_t sweep_size(std::uint64_t q, int n, SweepMode mode);
/// The i-th projective point (leading coordinate 1) or the i-th nonzero vector.
Vec sweep_vector(const Field& F, int n, std::uint64_t i, SweepMode mode);

struct SweepResult {
  bool irreducible = true;
  std::optional<Vec> witness;  // first vector, in sweep order, with a proper spin
  std::uint64_t visited = 0;
};

/// Throws CapExceeded if the sweep would visit more than cap vectors.
SweepResult irreducibility_sweep(const MatrixGroup& G, SweepMode mode = SweepMode::lines,
                                 std::uint64_t cap = kSweepCap);
bool is_irreducible_bruteforce(const MatrixGroup& G, SweepMode mode = SweepMode::lines,
                               std::uint64_t cap = kSweepCap);

struct BlockSystem {
  std::vector<Subspace> components;
  /// action[g][i] = j when generator g maps component i onto component j.
  std::vector<std::vector<std::size_t>> action;

  std::size_t size() const { return components.size(); }
};

/// Every imprimitivity system of an irreducible G, found from the stabilisers:
/// for each k | n and each subgroup K of index k, every K-submodule of
/// dimension n/k is spun up and its G-orbit tested for a direct decomposition.
/// Throws InvalidArgument if G is reducible, CapExceeded if |G| > group_cap.
std::vector<BlockSystem> find_block_systems(const MatrixGroup& G, std::size_t group_cap = 10000,
                                            std::uint64_t sweep_cap = kSweepCap);

/// Enveloping algebra is the full matrix algebra.
bool is_absolutely_irreducible(const MatrixGroup& G);

/// dim { X : X g = g X for all generators g }.
std::size_t centralizer_dimension(const std::vector<Matrix>& gens, FieldPtr F, int n);
std::size_t centralizer_dimension(const MatrixGroup& G);

struct ConjugacyOptions {
  /// Maximum number of search nodes (partial generator assignments).
  std::uint64_t node_budget = 20'000'000;
  /// Maximum number of elements of an intertwiner space scanned for an
  /// invertible one.
  std::uint64_t invertible_scan_cap = 1'000'000;
  bool parallel = true;
};

/// X with X^-1 G X = H, or nullopt once the generator-image search is
/// exhausted. Groups of different order give nullopt immediately. Throws
/// CapExceeded when a budget runs out.
std::optional<Matrix> conjugacy_search(const MatrixGroup& G, const MatrixGroup& H,
                                       const ConjugacyOptions& opts = {});

}  // namespace nilprim
