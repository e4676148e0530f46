#include <doctest.h>

#include "nilprim/construct.hpp"
#include "nilprim/kernels.hpp"
#include "nilprim/singer.hpp"
#include "support.hpp"

using namespace nilprim;

namespace {

void same_sweep(const SweepResult& a, const SweepResult& b) {
  CHECK(a.irreducible == b.irreducible);
  CHECK(a.witness == b.witness);
}

}  // namespace

TEST_CASE("sweep: serial and parallel agree") {
  auto g = testing::rng(81);
  for (auto [q, n] : {std::pair{3u, 2}, {3u, 3}, {3u, 4}, {5u, 3}, {7u, 2}, {9u, 2}, {3u, 6}}) {
    auto F = make_field_of_size(q);
    std::vector<std::vector<Matrix>> cases{{singer_cycle(n, F)},
                                           {Matrix::identity(F, n)},
                                           {testing::random_invertible(F, n, g)},
                                           {testing::random_invertible(F, n, g), testing::random_invertible(F, n, g)}};
    // block upper triangular: reducible with a late witness
    Matrix u = Matrix::identity(F, n);
    u.at(n - 1, 0) = F->one();
    cases.push_back({u, Matrix::scalar(F, n, F->primitive())});
    for (const auto& gens : cases)
      for (auto mode : {SweepMode::lines, SweepMode::full})
        same_sweep(kernels::sweep_serial(gens, F, n, mode), kernels::sweep_parallel(gens, F, n, mode));
  }
}

TEST_CASE("submodules: serial and parallel agree") {
  auto F = make_field(3, 1);
  const std::vector<std::vector<Matrix>> cases{
      {Matrix::identity(F, 4)},
      {pow(singer_cycle(4, F), 16)},
      {pow(singer_cycle(4, F), 10)},
      {Matrix::from_ints(F, {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}})}};
  for (const auto& gens : cases)
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto a = kernels::submodules_of_dim_serial(gens, F, 4, d);
      const auto b = kernels::submodules_of_dim_parallel(gens, F, 4, d);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].dim() == d);
      }
    }
  // the identity has (3^4 - 1)/2 invariant lines
  CHECK(kernels::submodules_of_dim_serial({Matrix::identity(F, 4)}, F, 4, 1).size() == 40);
}

TEST_CASE("conjugacy: serial and parallel agree") {
  auto g = testing::rng(82);
  for (auto q : {3u, 7u, 11u}) {
    auto F = make_field_of_size(q);
    const int t = sylow2_t(q);
    for (const auto& G : {nilprim_gl2(F, Sylow2Kind::quaternion8, 3, 1), nilprim_gl2(F, Sylow2Kind::semidihedral, t + 2, 1)}) {
      for (int trial = 0; trial < 3; ++trial) {
        const MatrixGroup H = G.conjugated_by(testing::random_invertible(F, 2, g));
        const auto p = kernels::prepare_conjugacy(G, H, 1'000'000);
        const auto a = kernels::conjugacy_serial(p, 1'000'000);
        const auto b = kernels::conjugacy_parallel(p, 1'000'000);
        REQUIRE(a);
        CHECK(a == b);
      }
    }
  }
}
