#pragma once

#include <random>
#include <vector>

#include "hcc/fpexact.hpp"
#include "hcc/groupring.hpp"

namespace testutil {

inline hcc::FpMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::uint32_t p) {
  hcc::FpMatrix m(rows, cols, p);
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d(rng));
  return m;
}

inline hcc::GroupRingElement random_element(std::mt19937& rng, const hcc::OrderedGroup& h, std::uint32_t p) {
  std::uniform_int_distribution<hcc::residue_t> d(0, p - 1);
  std::vector<hcc::residue_t> c(h.size());
  for (auto& x : c) x = d(rng);
  return hcc::GroupRingElement(h, p, std::move(c));
}

/// Rank by plain Gaussian elimination on a copy (independent of the library).
inline std::size_t naive_rank(const hcc::FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  auto power = [p](std::int64_t b, std::int64_t e) {
    std::int64_t res = 1;
    b %= p;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = power(a[rank][c], p - 2);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * inv % p;
      for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace testutil
