#pragma once

// Data-parallel kernels behind the oracle. Each has an OpenMP version and a
// plain serial reference with identical results; tests compare the two and
// bench/ times them.

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "nilprim/group.hpp"
#include "nilprim/oracle.hpp"

namespace nilprim::kernels {

SweepResult sweep_serial(const std::vector<Matrix>& gens, FieldPtr F, int n, SweepMode mode);
SweepResult sweep_parallel(const std::vector<Matrix>& gens, FieldPtr F, int n, SweepMode mode);

/// Distinct K-submodules of dimension target_dim spun from sweep vectors, in
/// sweep order of their first witness.
std::vector<Subspace> submodules_of_dim_serial(const std::vector<Matrix>& gens, FieldPtr F, int n,
                                               std::size_t target_dim);
std::vector<Subspace> submodules_of_dim_parallel(const std::vector<Matrix>& gens, FieldPtr F, int n,
                                                 std::size_t target_dim);

/// Prepared generator-image search: for each generator of G, the candidate
/// images in H (same order, same derived-subgroup membership).
struct ConjugacyProblem {
  const GroupIndex* G = nullptr;
  const GroupIndex* H = nullptr;
  FieldPtr field;
  int n = 0;
  std::vector<std::uint32_t> g_gens;
  std::vector<std::vector<std::uint32_t>> candidates;
  std::uint64_t invertible_scan_cap = 1'000'000;
};

ConjugacyProblem prepare_conjugacy(const MatrixGroup& G, const MatrixGroup& H, std::uint64_t scan_cap);

/// Depth-first search; the first witness in lexicographic candidate order.
std::optional<Matrix> conjugacy_serial(const ConjugacyProblem& p, std::uint64_t node_budget);
/// First-level candidates explored in parallel; the witness of the least
/// first-level candidate wins, so the result equals the serial one.
std::optional<Matrix> conjugacy_parallel(const ConjugacyProblem& p, std::uint64_t node_budget);

}  // namespace nilprim::kernels
