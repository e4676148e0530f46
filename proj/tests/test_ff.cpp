#include <doctest.h>

#include "nilprim/error.hpp"
#include "nilprim/ff.hpp"
#include "nilprim/numtheory.hpp"
#include "support.hpp"

using namespace nilprim;

TEST_CASE("prime field GF(3)") {
  auto F = make_field(3, 1);
  CHECK(F->size() == 3);
  CHECK(F->primitive() == F->from_int(2));
  CHECK(F->mul(F->from_int(2), F->from_int(2)) == F->one());
  CHECK(F->from_int(-1) == F->from_int(2));
}

TEST_CASE("GF(9) primitive element") {
  auto F = make_field(3, 2);
  const FieldElem w = F->primitive();
  CHECK(F->pow(w, 8) == F->one());
  CHECK(F->pow(w, 4) == F->neg(F->one()));
  CHECK(element_order(*F, w) == 8);
  CHECK(element_order(*F, F->pow(w, 4)) == 2);
  CHECK(element_order(*F, F->one()) == 1);
  CHECK_THROWS_AS(element_order(*F, F->zero()), InvalidArgument);
}

TEST_CASE("GF(729) group order factorisation") {
  auto F = make_field(3, 6);
  CHECK(F->size() == 729);
  const auto f = nt::factorize(F->size() - 1);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint64_t, int>{2, 3});
  CHECK(f[1] == std::pair<std::uint64_t, int>{7, 1});
  CHECK(f[2] == std::pair<std::uint64_t, int>{13, 1});
  CHECK(element_order(*F, F->primitive()) == 728);
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(make_field(4, 1), InvalidArgument);
  CHECK_THROWS_AS(make_field(9, 2), InvalidArgument);
  // x^2 + 1 = (x+1)^2 over GF(2) is reducible; x^2 - 1 over GF(3) too
  CHECK_THROWS_AS(make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{2, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint32_t>{1, 1}), InvalidArgument);
  CHECK_NOTHROW(make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1}));
}

TEST_CASE("make_field is deterministic") {
  for (int k = 1; k <= 6; ++k) {
    auto a = make_field(3, k);
    auto b = make_field(3, k);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->primitive() == b->primitive());
  }
  auto a = make_field(7, 3);
  CHECK(a->descriptor() == parse_field_descriptor(a->descriptor())->descriptor());
}

TEST_CASE("default modulus is the first irreducible in code order") {
  // GF(9): x^2 + 1 is the first monic irreducible quadratic over GF(3)
  CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  // GF(8): x^3 + x + 1
  CHECK(make_field(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("element text form") {
  auto F = make_field(3, 2);
  const FieldElem x = F->parse("1,2");
  CHECK(F->to_string(x) == "1,2");
  CHECK(F->coeffs(x) == std::vector<std::uint32_t>{1, 2});
  CHECK_THROWS_AS(F->parse("1"), InvalidArgument);
  CHECK_THROWS_AS(F->parse("1,3"), InvalidArgument);
}

TEST_CASE("frobenius") {
  auto F9 = make_field(3, 2);
  const FieldElem w = F9->primitive();
  CHECK(frobenius(*F9, w, 3, 1) == F9->pow(w, 3));
  CHECK(frobenius(*F9, w, 3, 2) == w);
  auto F = make_field(3, 6);
  const FieldElem x = F->generator_x();
  CHECK(frobenius(*F, x, 3, 3) == F->pow(x, 27));
  CHECK(frobenius(*F, x, 9, 1) == F->pow(x, 9));
  CHECK_THROWS_AS(frobenius(*F, x, 81, 1), InvalidArgument);
}

TEST_CASE("frobenius is an automorphism fixing exactly the prime field") {
  for (int k = 1; k <= 6; ++k) {
    auto F = make_field(3, k);
    std::uint32_t fixed = 0;
    for (std::uint32_t a = 0; a < F->size(); ++a) {
      const FieldElem x{a};
      if (frobenius(*F, x, 3, 1) == x) ++fixed;
    }
    CHECK(fixed == 3);
    auto g = testing::rng(static_cast<std::uint64_t>(k));
    for (int trial = 0; trial < 300; ++trial) {
      const FieldElem x = testing::random_elem(F, g), y = testing::random_elem(F, g);
      CHECK(frobenius(*F, F->add(x, y), 3, 1) == F->add(frobenius(*F, x, 3, 1), frobenius(*F, y, 3, 1)));
      CHECK(frobenius(*F, F->mul(x, y), 3, 1) == F->mul(frobenius(*F, x, 3, 1), frobenius(*F, y, 3, 1)));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  for (auto [p, k] : {std::pair{3u, 4}, std::pair{7u, 3}, std::pair{5u, 9}, std::pair{2u, 12}, std::pair{11u, 1}}) {
    auto F = make_field(p, k);
    auto g = testing::rng(p * 100 + static_cast<unsigned>(k));
    for (int trial = 0; trial < 200; ++trial) {
      const FieldElem a = testing::random_elem(F, g), b = testing::random_elem(F, g), c = testing::random_elem(F, g);
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->add(a, F->neg(a)) == F->zero());
      if (a.code) CHECK(F->mul(a, F->inv(a)) == F->one());
      if (a.code) CHECK((F->size() - 1) % element_order(*F, a) == 0);
    }
  }
}

TEST_CASE("large field without tables") {
  auto F = make_field(3, 19);
  CHECK(F->size() == 1162261467u);
  auto g = testing::rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElem a = testing::random_nonzero(F, g);
    CHECK(F->mul(a, F->inv(a)) == F->one());
  }
  CHECK(element_order(*F, F->primitive()) == F->size() - 1);
}

TEST_CASE("subfield embeddings") {
  auto F3 = make_field(3, 1), F9 = make_field(3, 2), F729 = make_field(3, 6);
  const Embedding e39(F3, F9);
  CHECK(e39.apply(F3->from_int(2)) == F9->pow(F9->primitive(), 4));
  const Embedding e3(F3, F729);
  CHECK(e3.apply(F3->one()) == F729->one());
  const Embedding e9(F9, F729);
  CHECK(element_order(*F729, e9.apply(F9->primitive())) == 8);
  // ring homomorphism on all pairs
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      const FieldElem x{a}, y{b};
      CHECK(e9.apply(F9->mul(x, y)) == F729->mul(e9.apply(x), e9.apply(y)));
      CHECK(e9.apply(F9->add(x, y)) == F729->add(e9.apply(x), e9.apply(y)));
    }
  for (std::uint32_t a = 0; a < 9; ++a) CHECK(e9.preimage(e9.apply(FieldElem{a})) == FieldElem{a});
  CHECK_FALSE(e9.preimage(F729->primitive()).has_value());
  CHECK_THROWS_AS(Embedding(make_field(3, 4), F729), InvalidArgument);
  CHECK_THROWS_AS(Embedding(make_field(5, 1), F729), InvalidArgument);
}

TEST_CASE("sum of two squares equal to -1") {
  auto F3 = make_field(3, 1);
  CHECK(sum_of_two_squares_minus_one(*F3) == std::pair{F3->one(), F3->one()});
  auto F7 = make_field(7, 1);
  const auto [e, f] = sum_of_two_squares_minus_one(*F7);
  CHECK(e == F7->from_int(2));
  CHECK(f == F7->from_int(3));
  CHECK(F7->mul(e, e) == F7->from_int(4));
  CHECK(F7->mul(f, f) == F7->from_int(2));
  for (auto q : {27u, 49u, 11u, 81u, 343u}) {
    auto F = make_field_of_size(q);
    const auto [a, b] = sum_of_two_squares_minus_one(*F);
    CHECK(F->add(F->add(F->mul(a, a), F->mul(b, b)), F->one()) == F->zero());
  }
  CHECK_THROWS_AS(sum_of_two_squares_minus_one(*make_field(2, 3)), InvalidArgument);
}

TEST_CASE("sqrt") {
  auto F = make_field(3, 3);
  for (std::uint32_t a = 0; a < F->size(); ++a) {
    const FieldElem x{a};
    const FieldElem sq = F->mul(x, x);
    const auto r = F->sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(F->mul(*r, *r) == sq);
    CHECK(r->code == std::min(x.code, F->neg(x).code));
  }
  CHECK_FALSE(F->sqrt(F->neg(F->one())).has_value());
}
