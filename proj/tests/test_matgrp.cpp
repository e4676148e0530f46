#include <doctest.h>

#include "nilprim/construct.hpp"
#include "nilprim/error.hpp"
#include "nilprim/isotype.hpp"
#include "nilprim/singer.hpp"
#include "support.hpp"

using namespace nilprim;

namespace {

MatrixGroup q8_gf3() {
  auto F = make_field(3, 1);
  return MatrixGroup({Matrix::from_ints(F, {{0, 1}, {-1, 0}}), Matrix::from_ints(F, {{1, 1}, {1, -1}})});
}

}  // namespace

TEST_CASE("matrix text form") {
  auto F = make_field(3, 1);
  const Matrix m = Matrix::from_ints(F, {{0, 1}, {-1, 0}});
  CHECK(to_string(m) == "0,1;2,0");
  CHECK(parse_matrix(F, "0,1;2,0") == m);
  auto F9 = make_field(3, 2);
  const Matrix w = Matrix::scalar(F9, 2, F9->primitive());
  CHECK(parse_matrix(F9, to_string(w)) == w);
  CHECK_THROWS_AS(parse_matrix(F, "0,1;2"), InvalidArgument);
  CHECK_THROWS_AS(parse_matrix(F, "0,1;2,5"), InvalidArgument);
}

TEST_CASE("closure") {
  auto F = make_field(3, 1);
  CHECK(close({Matrix::identity(F, 2)}).size() == 1);
  const auto syl = sylow2_gl2(F);
  CHECK(close({syl.x, syl.y}).size() == 16);
  CHECK(q8_gf3().order() == 8);
  CHECK_THROWS_AS(close({syl.x, syl.y}, 10), CapExceeded);
  CHECK_THROWS_AS(MatrixGroup({Matrix::from_ints(F, {{1, 1}, {1, 1}})}), InvalidArgument);
}

TEST_CASE("closure elements are closed and index arithmetic agrees with matrices") {
  auto F = make_field(7, 1);
  const auto syl = sylow2_gl2(F);
  const MatrixGroup G(F, 2, {syl.x, syl.y, Matrix::scalar(F, 2, F->from_int(2))});
  const GroupIndex& idx = G.index();
  CHECK(idx.size() == 96);
  CHECK(idx.element(0).is_identity());
  auto g = testing::rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = static_cast<std::uint32_t>(g() % idx.size()), b = static_cast<std::uint32_t>(g() % idx.size());
    CHECK(idx.element(idx.mul(a, b)) == idx.element(a) * idx.element(b));
    CHECK((idx.element(idx.inv(a)) * idx.element(a)).is_identity());
    CHECK(idx.order_of(a) == matrix_order(idx.element(a)));
  }
}

TEST_CASE("index arithmetic without a full table") {
  auto F = make_field(3, 1);
  const MatrixGroup G(F, 3, {Matrix::from_ints(F, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
                             Matrix::from_ints(F, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                             Matrix::from_ints(F, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
  const GroupIndex& idx = G.index();
  CHECK(idx.size() == 11232);  // |GL(3,3)|
  auto g = testing::rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = static_cast<std::uint32_t>(g() % idx.size()), b = static_cast<std::uint32_t>(g() % idx.size());
    CHECK(idx.element(idx.mul(a, b)) == idx.element(a) * idx.element(b));
    CHECK(idx.order_of(a) == matrix_order(idx.element(a)));
  }
}

TEST_CASE("matrix order") {
  auto F = make_field(3, 1);
  CHECK(matrix_order(Matrix::identity(F, 2)) == 1);
  CHECK(matrix_order(-Matrix::identity(F, 2)) == 2);
  CHECK(matrix_order(singer_cycle(2, F)) == 8);
  CHECK(matrix_order(Matrix::from_ints(F, {{1, 1}, {0, 1}})) == 3);
  CHECK_THROWS_AS(matrix_order(singer_cycle(6, F), 100), CapExceeded);
}

TEST_CASE("recognize_isotype examples") {
  auto F = make_field(3, 1);
  const auto syl = sylow2_gl2(F);
  CHECK(recognize_isotype(MatrixGroup({syl.x, syl.y})) == IsoType{Sylow2Kind::semidihedral, 16, 1});
  CHECK(recognize_isotype(q8_gf3()) == IsoType{Sylow2Kind::quaternion8, 8, 1});
  CHECK(recognize_isotype(MatrixGroup({singer_cycle(2, F)})) == IsoType{Sylow2Kind::cyclic, 8, 1});
  CHECK(recognize_isotype(MatrixGroup({Matrix::identity(F, 2)})) == IsoType{Sylow2Kind::trivial, 1, 1});
}

TEST_CASE("recognize_isotype on every maximal class type") {
  for (auto q : {7u, 23u, 31u}) {
    auto F = make_field_of_size(q);
    const int t = sylow2_t(q);
    for (int s = 3; s <= t + 1; ++s) {
      const std::uint64_t order = std::uint64_t{1} << s;
      CHECK(recognize_isotype(maximal_class_subgroup(F, Sylow2Kind::dihedral, s)) ==
            IsoType{Sylow2Kind::dihedral, order, 1});
      CHECK(recognize_isotype(maximal_class_subgroup(F, Sylow2Kind::generalised_quaternion, s)) ==
            IsoType{s == 3 ? Sylow2Kind::quaternion8 : Sylow2Kind::generalised_quaternion, order, 1});
    }
    const auto syl = sylow2_gl2(F);
    CHECK(recognize_isotype(MatrixGroup({syl.x, syl.y})) ==
          IsoType{Sylow2Kind::semidihedral, std::uint64_t{1} << (t + 2), 1});
  }
}

TEST_CASE("groups outside the family are rejected") {
  auto F = make_field(3, 1);
  // C2 x C2 diagonal
  CHECK_THROWS_AS(recognize_isotype(MatrixGroup({Matrix::from_ints(F, {{1, 0}, {0, -1}}), -Matrix::identity(F, 2)})),
                  NotInFamily);
  // GL(2,3) is not nilpotent
  CHECK_THROWS_AS(recognize_isotype(MatrixGroup({singer_cycle(2, F), Matrix::from_ints(F, {{1, 1}, {0, 1}})})),
                  NotInFamily);
  // C3 x C3 in GL(2,7): odd part not cyclic
  auto F7 = make_field(7, 1);
  CHECK_THROWS_AS(recognize_isotype(MatrixGroup({Matrix::from_ints(F7, {{2, 0}, {0, 1}}),
                                                 Matrix::from_ints(F7, {{1, 0}, {0, 2}})})),
                  NotInFamily);
  // modular group M16 = <a, b | a^8, b^2, a^b = a^5> is not of maximal class
  auto F17 = make_field(17, 1);
  const Matrix b = Matrix::from_ints(F17, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(recognize_isotype(MatrixGroup({Matrix::from_ints(F17, {{9, 0}, {0, 8}}), b})), NotInFamily);
}

TEST_CASE("IsoType validation and names") {
  CHECK_NOTHROW(validate(IsoType{Sylow2Kind::quaternion8, 8, 13}));
  CHECK_THROWS_AS(validate(IsoType{Sylow2Kind::quaternion8, 16, 1}), InvalidArgument);
  CHECK_THROWS_AS(validate(IsoType{Sylow2Kind::dihedral, 8, 1}), InvalidArgument);
  CHECK_THROWS_AS(validate(IsoType{Sylow2Kind::generalised_quaternion, 8, 1}), InvalidArgument);
  CHECK_THROWS_AS(validate(IsoType{Sylow2Kind::cyclic, 8, 6}), InvalidArgument);
  CHECK(describe(IsoType{Sylow2Kind::quaternion8, 8, 13}) == "Q8 x C13");
  CHECK(describe(IsoType{Sylow2Kind::semidihedral, 16, 1}) == "SD16");
  CHECK(describe(IsoType{Sylow2Kind::trivial, 1, 7}) == "C7");
  CHECK(parse_sylow2_kind("sd") == Sylow2Kind::semidihedral);
  CHECK_THROWS_AS(parse_sylow2_kind("xx"), InvalidArgument);
}

TEST_CASE("decompose_2_odd") {
  auto F = make_field(3, 1);
  const auto [s1, o1] = decompose_2_odd(q8_times_c(3, F, 13));
  CHECK(s1.order() == 8);
  CHECK(o1.order() == 13);
  CHECK(o1.generators().size() == 1);
  const auto [s2, o2] = decompose_2_odd(q8_gf3());
  CHECK(s2.order() == 8);
  CHECK(o2.order() == 1);
  const MatrixGroup C104({pow(singer_cycle(6, F), 7)});
  CHECK(C104.order() == 104);
  const auto [s3, o3] = decompose_2_odd(C104);
  CHECK(s3.order() == 8);
  CHECK(o3.order() == 13);
  CHECK(recognize_isotype(s3) == IsoType{Sylow2Kind::cyclic, 8, 1});
}

TEST_CASE("derived_subgroup") {
  auto F = make_field(3, 1);
  CHECK(derived_subgroup(MatrixGroup({singer_cycle(2, F)})).order() == 1);
  const MatrixGroup dq = derived_subgroup(q8_gf3());
  CHECK(dq.order() == 2);
  CHECK(dq.contains(-Matrix::identity(F, 2)));
  const auto syl = sylow2_gl2(F);
  const MatrixGroup ds = derived_subgroup(MatrixGroup({syl.x, syl.y}));
  CHECK(ds.order() == 4);
  CHECK(recognize_isotype(ds) == IsoType{Sylow2Kind::cyclic, 4, 1});
}

TEST_CASE("property: isotype is conjugation invariant") {
  auto F = make_field(7, 1);
  auto g = testing::rng(11);
  std::vector<MatrixGroup> groups{nilprim_gl2(F, Sylow2Kind::semidihedral, 5, 3),
                                  nilprim_gl2(F, Sylow2Kind::dihedral, 4, 1),
                                  nilprim_gl2(F, Sylow2Kind::generalised_quaternion, 4, 3),
                                  nilprim_gl2(F, Sylow2Kind::quaternion8, 3, 1)};
  for (const auto& G : groups) {
    const IsoType t = recognize_isotype(G);
    for (int trial = 0; trial < 5; ++trial) {
      const MatrixGroup H = G.conjugated_by(testing::random_invertible(F, 2, g));
      CHECK(recognize_isotype(H) == t);
      CHECK(t.sylow2_order * t.odd_order == H.order());
    }
  }
}

TEST_CASE("property: derived subgroup cyclic and odd part cyclic across the family") {
  for (auto q : {3u, 7u, 11u, 19u}) {
    auto F = make_field_of_size(q);
    const int t = sylow2_t(q);
    std::vector<MatrixGroup> gs{nilprim_gl2(F, Sylow2Kind::quaternion8, 3, 1),
                                nilprim_gl2(F, Sylow2Kind::semidihedral, t + 2, 1)};
    for (auto c : {1u, 3u, 5u, 9u})
      if ((q - 1) % c == 0) gs.push_back(nilprim_gl2(F, Sylow2Kind::semidihedral, t + 2, c));
    for (const auto& G : gs) {
      const MatrixGroup D = derived_subgroup(G);
      CHECK(recognize_isotype(D).sylow2_kind != Sylow2Kind::dihedral);
      const GroupIndex& di = D.index();
      bool cyclic = false;
      for (std::uint32_t i = 0; i < di.size(); ++i) cyclic = cyclic || di.order_of(i) == di.size();
      CHECK(cyclic);
      const auto [two, odd] = decompose_2_odd(G);
      CHECK(odd.generators().size() <= 1);
      CHECK(two.order() * odd.order() == G.order());
    }
  }
}
