#pragma once

// |Ω^k_{p,r}|: the number of (j_1..j_r) with 0 <= j_i <= p-1 summing to k,
// i.e. the coefficient of x^k in (1 + x + ... + x^{p-1})^r. Three independent
// formulas plus the inequality families built on top of them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hcc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct OmegaTable {
  std::uint32_t p = 0;
  std::size_t r = 0;
  std::vector<BigInt> coeffs;  // length r(p-1)+1

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
  /// Zero outside [0, r(p-1)].
  BigInt at(long long k) const;
};

/// Upper limit on r(p-1) for the Ω routines.
inline constexpr std::size_t kOmegaDegreeCap = 10000;

/// r-fold self-convolution of (1, 1, ..., 1) (p ones).
OmegaTable omega_by_convolution(std::uint32_t p, std::size_t r);

/// Σ_j (-1)^j C(r,j) C(k-pj+r-1, k-pj); zero when k is out of range.
BigInt omega_by_alternating_sum(std::uint32_t p, std::size_t r, long long k);

/// A partition of m into parts at most p-1, as (part, multiplicity) pairs
/// with strictly increasing parts.
struct Partition {
  std::vector<std::pair<std::size_t, std::size_t>> parts;

  std::size_t length() const;   // |α| = Σ l_i
  BigInt part_factorials() const;  // N_α = Π (n_i!)^{l_i}
  BigInt multiplicity_factorials() const;  // L_α = Π l_i!
};

/// All partitions of m into parts no larger than max_part, lexicographic in
/// the (ascending) part sequence.
std::vector<Partition> enumerate_partitions(std::size_t m, std::size_t max_part);

/// Σ_{α} r!/(r-|α|)! / L_α over partitions α of m into parts ≤ p-1.
/// Only defined for 1 <= m <= r; throws std::out_of_range otherwise.
BigInt omega_by_partitions(std::uint32_t p, std::size_t r, std::size_t m);

/// Π^k_{p,r} = (r-1)|Ω^k| - Σ_{i>k} |Ω^i|. Throws std::out_of_range unless
/// 0 <= k <= r(p-1).
BigInt pi_value(std::uint32_t p, std::size_t r, std::size_t k);
BigInt pi_value(const OmegaTable& table, std::size_t k);

BigInt binomial(std::size_t n, std::size_t k);

struct InequalityRow {
  std::string family;  // odd-central, even-central, rank-central, pi-midpoint[-binomial], pi-top, pi-argmax
  std::uint32_t p = 2;
  std::size_t param = 0;  // t for the two central families, r otherwise
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  bool equality = false;
  std::string note;
};

struct InequalityReport {
  std::vector<InequalityRow> rows;

  // (2t+1) C(2t+1,t+1) >= 2^{2t+1} - 1 for all t, equality only at t = 0
  bool odd_central_ok = true;
  // (2t - 1/2) C(2t,t) >= 2^{2t} - 1 for t >= 1, equality only at t = 1
  bool even_central_ok = true;
  // r C(r,⌊r/2⌋) >= 3·2^{r-1} - 2 holds for every r >= 4
  bool rank_central_holds_from_4 = true;
  // ... and fails for every r < 4 (the "only if" direction)
  bool rank_central_fails_below_4 = true;
  std::vector<std::size_t> rank_central_small_r_holding;  // witnesses r < 4 where it holds
  // Π^{⌊(r+1)/2⌋}_{2,r} >= 2^{r-1} - 1, equality only at r ∈ {1,2}; same for the
  // rearranged form r C(r,⌊r/2⌋) >= 2^{r-1} + Σ_{i>=⌊(r+1)/2⌋} C(r,i) - 1
  bool pi_midpoint_ok = true;
  // Π^{r(p-1)-j}_{p,r} >= Π^{r-j}_{2,r} for 0 <= j <= ⌊(r+1)/2⌋
  bool pi_top_ok = true;
  // smallest argmax of k -> Π^k_{2,r} is ⌊(r+1)/2⌋
  bool pi_argmax_ok = true;
  // r values where the maximum of Π^k_{2,r} is attained more than once
  std::vector<std::size_t> pi_argmax_ties;
};

/// Evaluates every inequality family for r = 1..r_max (t = 0..r_max/2) and
/// the top-of-table Π comparison against p = 2 for each p in p_list.
InequalityReport check_inequality_suite(std::size_t r_max, const std::vector<std::uint32_t>& p_list);

}  // namespace hcc
