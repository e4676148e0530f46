#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "nilprim/group.hpp"

namespace testing {

using nilprim::FieldElem;
using nilprim::FieldPtr;
using nilprim::Matrix;
using nilprim::MatrixGroup;

// Fixed seeds keep every property run reproducible; NILPRIM_SEED shifts them.
inline std::uint64_t base_seed() {
  static const std::uint64_t s = [] {
    const char* env = std::getenv("NILPRIM_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 20240611ULL;
  }();
  return s;
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(base_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline FieldElem random_elem(const FieldPtr& F, std::mt19937_64& g) {
  return FieldElem{static_cast<std::uint32_t>(g() % F->size())};
}

inline FieldElem random_nonzero(const FieldPtr& F, std::mt19937_64& g) {
  return FieldElem{static_cast<std::uint32_t>(1 + g() % (F->size() - 1))};
}

inline Matrix random_matrix(const FieldPtr& F, int n, std::mt19937_64& g) {
  Matrix m(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_elem(F, g);
  return m;
}

inline Matrix random_invertible(const FieldPtr& F, int n, std::mt19937_64& g) {
  while (true) {
    Matrix m = random_matrix(F, n, g);
    if (nilprim::determinant(m).code != 0) return m;
  }
}

inline std::vector<FieldElem> random_vector(const FieldPtr& F, int n, std::mt19937_64& g) {
  std::vector<FieldElem> v(static_cast<std::size_t>(n));
  do {
    for (auto& x : v) x = random_elem(F, g);
  } while (std::all_of(v.begin(), v.end(), [](FieldElem x) { return x.code == 0; }));
  return v;
}

// Every invertible n x n matrix over F, in code order.
inline std::vector<Matrix> all_invertible(const FieldPtr& F, int n) {
  std::vector<Matrix> out;
  const std::uint64_t q = F->size();
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m(F, n);
    std::uint64_t c = code;
    for (int i = 0; i < n * n; ++i, c /= q) m.at(i / n, i % n) = FieldElem{static_cast<std::uint32_t>(c % q)};
    if (nilprim::determinant(m).code != 0) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace testing
