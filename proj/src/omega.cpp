#include "hcc/omega.hpp"

#include <map>
#include <stdexcept>

#include "hcc/error.hpp"
#include "hcc/fpexact.hpp"

namespace hcc {

namespace {

void check_args(std::uint32_t p, std::size_t r) {
  require_prime(p);
  if (r * (p - 1) > kOmegaDegreeCap)
    throw CapError("omega: r(p-1) = " + std::to_string(r * (p - 1)) + " exceeds the cap of " +
                   std::to_string(kOmegaDegreeCap));
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

InequalityRow make_row(std::string family, std::uint32_t p, std::size_t param) {
  InequalityRow row;
  row.family = std::move(family);
  row.p = p;
  row.param = param;
  return row;
}

}  // namespace

BigInt OmegaTable::at(long long k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs.size()) return 0;
  return coeffs[static_cast<std::size_t>(k)];
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

OmegaTable omega_by_convolution(std::uint32_t p, std::size_t r) {
  check_args(p, r);
  std::vector<BigInt> poly{1};
  for (std::size_t step = 0; step < r; ++step) {
    // multiply by 1 + x + ... + x^{p-1} via a sliding window sum
    std::vector<BigInt> next(poly.size() + p - 1);
    BigInt window = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < poly.size()) window += poly[k];
      if (k >= p) window -= poly[k - p];
      next[k] = window;
    }
    poly = std::move(next);
  }
  return OmegaTable{p, r, std::move(poly)};
}

BigInt omega_by_alternating_sum(std::uint32_t p, std::size_t r, long long k) {
  check_args(p, r);
  if (k < 0 || static_cast<std::size_t>(k) > r * (p - 1)) return 0;
  BigInt total = 0;
  for (std::size_t j = 0; j <= r && static_cast<long long>(p * j) <= k; ++j) {
    const auto rest = static_cast<std::size_t>(k - static_cast<long long>(p * j));
    BigInt term = binomial(r, j) * binomial(rest + r - 1, rest);
    if (j % 2) total -= term; else total += term;
  }
  return total;
}

std::size_t Partition::length() const {
  std::size_t s = 0;
  for (auto [n, l] : parts) s += l;
  return s;
}

BigInt Partition::part_factorials() const {
  BigInt out = 1;
  for (auto [n, l] : parts) out *= boost::multiprecision::pow(factorial(n), static_cast<unsigned>(l));
  return out;
}

BigInt Partition::multiplicity_factorials() const {
  BigInt out = 1;
  for (auto [n, l] : parts) out *= factorial(l);
  return out;
}

namespace {

void enumerate_rec(std::size_t remaining, std::size_t min_part, std::size_t max_part, Partition& cur,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t n = min_part; n <= std::min(max_part, remaining); ++n)
    for (std::size_t l = 1; l * n <= remaining; ++l) {
      cur.parts.emplace_back(n, l);
      enumerate_rec(remaining - l * n, n + 1, max_part, cur, out);
      cur.parts.pop_back();
    }
}

// weights[rem][top][s] = Σ 1/L_α over partitions α of rem with parts ≤ top
// and |α| = s. Memoised on (remaining, max part).
class PartitionWeights {
 public:
  explicit PartitionWeights(std::size_t max_part) : max_part_(max_part) {}

  const std::vector<BigRational>& get(std::size_t rem, std::size_t top) {
    top = std::min(top, max_part_);
    auto key = std::make_pair(rem, top);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<BigRational> w;
    if (rem == 0) {
      w = {BigRational(1)};
    } else if (top > 0) {
      // largest part is `top` with multiplicity l >= 0
      w = get(rem, top - 1);
      BigRational inv_fact = 1;
      for (std::size_t l = 1; l * top <= rem; ++l) {
        inv_fact /= l;
        const auto& sub = get(rem - l * top, top - 1);
        if (w.size() < sub.size() + l) w.resize(sub.size() + l, BigRational(0));
        for (std::size_t s = 0; s < sub.size(); ++s) w[s + l] += sub[s] * inv_fact;
      }
    }
    return memo_.emplace(key, std::move(w)).first->second;
  }

 private:
  std::size_t max_part_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BigRational>> memo_;
};

}  // namespace

std::vector<Partition> enumerate_partitions(std::size_t m, std::size_t max_part) {
  std::vector<Partition> out;
  if (m == 0 || max_part == 0) return out;
  Partition cur;
  enumerate_rec(m, 1, max_part, cur, out);
  return out;
}

BigInt omega_by_partitions(std::uint32_t p, std::size_t r, std::size_t m) {
  check_args(p, r);
  if (m < 1 || m > r)
    throw std::out_of_range("omega_by_partitions: m = " + std::to_string(m) +
                            " outside the valid range [1, r = " + std::to_string(r) + "]");
  PartitionWeights weights(p - 1);
  const auto& w = weights.get(m, p - 1);
  BigRational total = 0;
  BigInt falling = 1;  // r!/(r-s)!
  for (std::size_t s = 0; s < w.size() && s <= r; ++s) {
    if (s > 0) falling *= r - s + 1;
    total += w[s] * BigRational(falling);
  }
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("omega_by_partitions: non-integral sum");
  return boost::multiprecision::numerator(total);
}

BigInt pi_value(const OmegaTable& t, std::size_t k) {
  if (k > t.degree())
    throw std::out_of_range("pi_value: k = " + std::to_string(k) + " outside [0, r(p-1)]");
  BigInt tail = 0;
  for (std::size_t i = k + 1; i <= t.degree(); ++i) tail += t.coeffs[i];
  return BigInt(t.r - 1) * t.coeffs[k] - tail;
}

BigInt pi_value(std::uint32_t p, std::size_t r, std::size_t k) {
  return pi_value(omega_by_convolution(p, r), k);
}

InequalityReport check_inequality_suite(std::size_t r_max, const std::vector<std::uint32_t>& p_list) {
  if (r_max < 1) throw InputError("inequality suite: r_max must be at least 1");
  InequalityReport rep;
  auto pow2 = [](std::size_t e) { return BigInt(1) << e; };

  for (std::size_t t = 0; t <= r_max / 2; ++t) {
    InequalityRow row = make_row("odd-central", 2, t);
    row.lhs = BigInt(2 * t + 1) * binomial(2 * t + 1, t + 1);
    row.rhs = pow2(2 * t + 1) - 1;
    row.holds = row.lhs >= row.rhs;
    row.equality = row.lhs == row.rhs;
    rep.odd_central_ok = rep.odd_central_ok && row.holds && (row.equality == (t == 0));
    rep.rows.push_back(row);
  }
  for (std::size_t t = 1; t <= std::max<std::size_t>(1, r_max / 2); ++t) {
    // doubled: (4t - 1) C(2t,t) >= 2 (2^{2t} - 1)
    InequalityRow row = make_row("even-central", 2, t);
    row.lhs = BigInt(4 * t - 1) * binomial(2 * t, t);
    row.rhs = 2 * (pow2(2 * t) - 1);
    row.note = "both sides doubled";
    row.holds = row.lhs >= row.rhs;
    row.equality = row.lhs == row.rhs;
    rep.even_central_ok = rep.even_central_ok && row.holds && (row.equality == (t == 1));
    rep.rows.push_back(row);
  }
  for (std::size_t r = 1; r <= r_max; ++r) {
    InequalityRow row = make_row("rank-central", 2, r);
    row.lhs = BigInt(r) * binomial(r, r / 2);
    row.rhs = 3 * pow2(r - 1) - 2;
    row.holds = row.lhs >= row.rhs;
    row.equality = row.lhs == row.rhs;
    if (r >= 4) {
      rep.rank_central_holds_from_4 = rep.rank_central_holds_from_4 && row.holds;
    } else if (row.holds) {
      rep.rank_central_fails_below_4 = false;
      rep.rank_central_small_r_holding.push_back(r);
      row.note = "holds below r = 4";
    }
    rep.rows.push_back(row);
  }
  for (std::size_t r = 1; r <= r_max; ++r) {
    const std::size_t k = (r + 1) / 2;
    OmegaTable t2 = omega_by_convolution(2, r);

    InequalityRow row = make_row("pi-midpoint", 2, r);
    row.lhs = pi_value(t2, k);
    row.rhs = pow2(r - 1) - 1;
    row.holds = row.lhs >= row.rhs;
    row.equality = row.lhs == row.rhs;
    rep.pi_midpoint_ok = rep.pi_midpoint_ok && row.holds && (row.equality == (r <= 2));
    rep.rows.push_back(row);

    InequalityRow row2 = make_row("pi-midpoint-binomial", 2, r);
    row2.lhs = BigInt(r) * binomial(r, r / 2);
    BigInt tail = 0;
    for (std::size_t i = k; i <= r; ++i) tail += binomial(r, i);
    row2.rhs = pow2(r - 1) + tail - 1;
    row2.holds = row2.lhs >= row2.rhs;
    row2.equality = row2.lhs == row2.rhs;
    rep.pi_midpoint_ok = rep.pi_midpoint_ok && row2.holds && (row2.equality == (r <= 2));
    rep.rows.push_back(row2);

    // argmax over k of Π^k_{2,r}
    BigInt best = pi_value(t2, 0);
    std::size_t argmax = 0, hits = 1;
    for (std::size_t kk = 1; kk <= r; ++kk) {
      BigInt v = pi_value(t2, kk);
      if (v > best) {
        best = v;
        argmax = kk;
        hits = 1;
      } else if (v == best) {
        ++hits;
      }
    }
    InequalityRow c2 = make_row("pi-argmax", 2, r);
    c2.lhs = argmax;
    c2.rhs = k;
    c2.holds = argmax == k;
    c2.equality = hits > 1;
    if (hits > 1) {
      c2.note = "maximum attained " + std::to_string(hits) + " times";
      rep.pi_argmax_ties.push_back(r);
    }
    rep.pi_argmax_ok = rep.pi_argmax_ok && c2.holds;
    rep.rows.push_back(c2);

    for (std::uint32_t p : p_list) {
      if (r * (p - 1) > kOmegaDegreeCap) continue;
      OmegaTable tp = omega_by_convolution(p, r);
      for (std::size_t j = 0; j <= k; ++j) {
        InequalityRow c1 = make_row("pi-top", p, r);
        c1.lhs = pi_value(tp, r * (p - 1) - j);
        c1.rhs = pi_value(t2, r - j);
        c1.holds = c1.lhs >= c1.rhs;
        c1.equality = c1.lhs == c1.rhs;
        c1.note = "j=" + std::to_string(j);
        rep.pi_top_ok = rep.pi_top_ok && c1.holds;
        rep.rows.push_back(c1);
      }
    }
  }
  return rep;
}

}  // namespace hcc
