#include <doctest.h>

#include <algorithm>

#include "hcc/error.hpp"
#include "hcc/omega.hpp"

using namespace hcc;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> pi_row(std::uint32_t p, std::size_t r) {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k <= r * (p - 1); ++k) out.push_back(pi_value(p, r, k));
  return out;
}

}  // namespace

TEST_CASE("Ω coefficient tables") {
  CHECK(omega_by_convolution(3, 4).coeffs == big({1, 4, 10, 16, 19, 16, 10, 4, 1}));
  CHECK(omega_by_convolution(5, 3).coeffs == big({1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1}));
  CHECK(omega_by_convolution(2, 6).coeffs == big({1, 6, 15, 20, 15, 6, 1}));
  CHECK(omega_by_convolution(7, 0).coeffs == big({1}));
  const auto t = omega_by_convolution(2, 3);
  CHECK(t.degree() == 3);
  CHECK(t.at(-1) == 0);
  CHECK(t.at(4) == 0);
  CHECK_THROWS_AS(omega_by_convolution(4, 2), InputError);
}

TEST_CASE("three formulas agree") {
  CHECK(omega_by_alternating_sum(5, 3, 6) == 19);
  CHECK(omega_by_partitions(2, 5, 3) == 10);
  CHECK(omega_by_partitions(3, 3, 2) == 6);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t r = 1; r <= 8; ++r) {
      const auto t = omega_by_convolution(p, r);
      for (std::size_t k = 0; k <= t.degree(); ++k)
        CHECK(omega_by_alternating_sum(p, r, static_cast<long long>(k)) == t.coeffs[k]);
      for (std::size_t m = 1; m <= r; ++m) CHECK(omega_by_partitions(p, r, m) == t.coeffs[m]);
    }
  }
  CHECK_THROWS_AS(omega_by_partitions(3, 3, 4), std::out_of_range);
  CHECK_THROWS_AS(omega_by_partitions(3, 3, 0), std::out_of_range);
}

TEST_CASE("partition enumeration") {
  const auto parts = enumerate_partitions(4, 4);
  CHECK(parts.size() == 5);
  const auto capped = enumerate_partitions(4, 2);
  CHECK(capped.size() == 3);  // 2+2, 2+1+1, 1+1+1+1
  for (const auto& a : parts) {
    std::size_t total = 0;
    for (auto [n, l] : a.parts) total += n * l;
    CHECK(total == 4);
  }
  // 2+1+1 : N = 2!·1!·1! = 2, L = 1!·2! = 2, length 3
  const auto it = std::find_if(parts.begin(), parts.end(), [](const Partition& a) { return a.length() == 3; });
  REQUIRE(it != parts.end());
  CHECK(it->part_factorials() == 2);
  CHECK(it->multiplicity_factorials() == 2);
}

TEST_CASE("recursion, symmetry and monotonicity") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t r = 1; r <= 9; ++r) {
      const auto prev = omega_by_convolution(p, r - 1);
      const auto cur = omega_by_convolution(p, r);
      const std::size_t n = cur.degree();
      for (std::size_t k = 0; k <= n; ++k) {
        BigInt s = 0;
        for (std::size_t j = 0; j < p; ++j) s += prev.at(static_cast<long long>(k) - static_cast<long long>(j));
        CHECK(cur.coeffs[k] == s);
        CHECK(cur.coeffs[k] == cur.coeffs[n - k]);
        if (k <= r) CHECK(cur.coeffs[k] >= binomial(r, k));
        if (r >= 2 && k >= 1 && k <= n / 2) CHECK(cur.coeffs[k - 1] < cur.coeffs[k]);
      }
    }
  }
}

TEST_CASE("Π tables") {
  CHECK(pi_row(2, 3) == big({-5, 2, 5, 2}));
  CHECK(pi_row(2, 4) == big({-12, 1, 13, 11, 3}));
  CHECK(pi_row(2, 5) == big({-27, -6, 24, 34, 19, 4}));
  CHECK(pi_row(2, 6) == big({-58, -27, 33, 78, 68, 29, 5}));
  CHECK(pi_row(3, 3) == big({-24, -17, -5, 4, 8, 5, 2}));
  const auto t = omega_by_convolution(2, 5);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(pi_value(t, k) == pi_value(2, 5, k));
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("inequality suite") {
  const auto rep = check_inequality_suite(12, {2, 3, 5});
  CHECK(rep.odd_central_ok);
  CHECK(rep.even_central_ok);
  CHECK(rep.rank_central_holds_from_4);
  CHECK(rep.pi_midpoint_ok);
  CHECK(rep.pi_top_ok);
  CHECK(rep.pi_argmax_ok);
  // r C(r,⌊r/2⌋) against 3·2^{r-1} - 2 is an equality at r = 1, 2 and fails at r = 3.
  CHECK_FALSE(rep.rank_central_fails_below_4);
  CHECK(rep.rank_central_small_r_holding == std::vector<std::size_t>{1, 2});
  std::vector<std::pair<BigInt, BigInt>> rank_central;
  for (const auto& row : rep.rows)
    if (row.family == "rank-central" && row.param <= 6) rank_central.emplace_back(row.lhs, row.rhs);
  const std::vector<std::pair<BigInt, BigInt>> want = {{1, 1}, {4, 4}, {9, 10}, {24, 22}, {50, 46}, {120, 94}};
  CHECK(rank_central == want);
}
