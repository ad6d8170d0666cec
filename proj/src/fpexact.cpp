#include "hcc/fpexact.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "hcc/error.hpp"

namespace hcc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { require_prime(p); }

residue_t PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<residue_t>(r < 0 ? r + p_ : r);
}

residue_t PrimeField::add(residue_t a, residue_t b) const noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<residue_t>(s >= p_ ? s - p_ : s);
}

residue_t PrimeField::sub(residue_t a, residue_t b) const noexcept {
  return a >= b ? a - b : static_cast<residue_t>(std::uint64_t{a} + p_ - b);
}

residue_t PrimeField::neg(residue_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

residue_t PrimeField::mul(residue_t a, residue_t b) const noexcept {
  return static_cast<residue_t>(std::uint64_t{a} * b % p_);
}

residue_t PrimeField::inv(residue_t a) const {
  if (a == 0) throw InputError("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<residue_t>(result);
}

namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("HCC_MATRIX_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 22;
}

std::size_t& cap_storage() {
  static std::size_t cap = initial_cap();
  return cap;
}

}  // namespace

std::size_t matrix_cap() { return cap_storage(); }
void set_matrix_cap(std::size_t cap) { cap_storage() = cap; }

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p) {
  require_prime(p);
  if (cols != 0 && rows > matrix_cap() / cols)
    throw CapError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                   " exceeds the size cap of " + std::to_string(matrix_cap()) +
                   " entries (set HCC_MATRIX_CAP to raise it)");
  data_.assign(rows * cols, 0);
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  std::int64_t x = v % static_cast<std::int64_t>(p_);
  data_[r * cols_ + c] = static_cast<residue_t>(x < 0 ? x + p_ : x);
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](residue_t v) { return v == 0; });
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_) throw InputError("matrix modulus mismatch");
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in product");
  FpMatrix out(a.rows_, b.cols_, a.p_);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::uint64_t x = a.at(r, k);
      if (x == 0) continue;
      auto brow = b.row(k);
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + x * brow[c]) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) out.data_[r * out.cols_ + c] = static_cast<residue_t>(acc[c]);
  }
  return out;
}

namespace {

// In-place row echelon form; returns pivot columns (one per nonzero row).
std::vector<std::size_t> row_echelon(FpMatrix& m) {
  const PrimeField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead) {
      auto a = m.row(piv), b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const residue_t inv = f.inv(m.at(lead, c));
    auto prow = m.row(lead);
    for (std::size_t r = lead + 1; r < m.rows(); ++r) {
      residue_t x = m.at(r, c);
      if (x == 0) continue;
      residue_t factor = f.mul(x, inv);
      auto row = m.row(r);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (prow[k]) row[k] = f.sub(row[k], f.mul(factor, prow[k]));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FpMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  FpMatrix work = m.rows() <= m.cols() ? m : m.transpose();
  return row_echelon(work).size();
}

std::size_t kernel_dim(const FpMatrix& m) { return m.rows() - rank(m); }

FpMatrix left_kernel_basis(const FpMatrix& m) {
  // Left kernel of M = right kernel of M^T: reduce M^T to RREF and read off
  // one basis vector per free column.
  FpMatrix t = m.transpose();
  const PrimeField f = t.field();
  std::vector<std::size_t> pivots = row_echelon(t);
  // back-substitute to reduced form with unit pivots
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    residue_t inv = f.inv(t.at(k, c));
    auto prow = t.row(k);
    for (auto& x : prow) x = f.mul(x, inv);
    for (std::size_t r = 0; r < k; ++r) {
      residue_t x = t.at(r, c);
      if (x == 0) continue;
      auto row = t.row(r);
      for (std::size_t j = c; j < t.cols(); ++j)
        if (prow[j]) row[j] = f.sub(row[j], f.mul(x, prow[j]));
    }
  }
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  FpMatrix basis(n - pivots.size(), n, m.modulus());
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      basis.set(out, pivots[k], f.neg(t.at(k, free)));
    ++out;
  }
  return basis;
}

void apply_left(FpMatrix& m, const ElementaryOp& op) {
  if (op.kind == ElementaryOp::Kind::Swap) {
    auto a = m.row(op.i), b = m.row(op.j);
    std::swap_ranges(a.begin(), a.end(), b.begin());
    return;
  }
  const PrimeField f = m.field();
  for (std::size_t c = 0; c < m.cols(); ++c)
    m.set(op.j, c, f.add(m.at(op.j, c), f.mul(op.q, m.at(op.i, c))));
}

void apply_right(FpMatrix& m, const ElementaryOp& op) {
  const PrimeField f = m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (op.kind == ElementaryOp::Kind::Swap) {
      residue_t a = m.at(r, op.i), b = m.at(r, op.j);
      m.set(r, op.i, b);
      m.set(r, op.j, a);
    } else {
      m.set(r, op.i, f.add(m.at(r, op.i), f.mul(op.q, m.at(r, op.j))));
    }
  }
}

SnfResult smith_normal_form(const FpMatrix& input) {
  FpMatrix m = input;
  const PrimeField f = m.field();
  SnfResult out;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = m.rows(), pc = m.cols();
    for (std::size_t c = t; c < m.cols() && pr == m.rows(); ++c)
      for (std::size_t r = t; r < m.rows(); ++r)
        if (m.at(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == m.rows()) break;
    if (pr != t) {
      ElementaryOp op{ElementaryOp::Kind::Swap, t, pr};
      apply_left(m, op);
      out.left_ops.push_back(op);
    }
    if (pc != t) {
      ElementaryOp op{ElementaryOp::Kind::Swap, t, pc};
      apply_right(m, op);
      out.right_ops.push_back(op);
    }
    const residue_t pivot = m.at(t, t);
    const residue_t inv = f.inv(pivot);
    for (std::size_t r = t + 1; r < m.rows(); ++r) {
      if (m.at(r, t) == 0) continue;
      ElementaryOp op{ElementaryOp::Kind::Transvection, t, r, f.neg(f.mul(m.at(r, t), inv))};
      apply_left(m, op);
      out.left_ops.push_back(op);
    }
    for (std::size_t c = t + 1; c < m.cols(); ++c) {
      if (m.at(t, c) == 0) continue;
      ElementaryOp op{ElementaryOp::Kind::Transvection, c, t, f.neg(f.mul(m.at(t, c), inv))};
      apply_right(m, op);
      out.right_ops.push_back(op);
    }
    out.diagonal.push_back(pivot);
  }
  out.rank = out.diagonal.size();
  return out;
}

FpMatrix replay(const FpMatrix& m, const SnfResult& snf) {
  FpMatrix out = m;
  for (const auto& op : snf.left_ops) apply_left(out, op);
  for (const auto& op : snf.right_ops) apply_right(out, op);
  return out;
}

EchelonBasis::EchelonBasis(std::size_t dim, std::uint32_t p) : n_(dim), f_(p) {}

std::vector<residue_t> EchelonBasis::reduced(std::span<const residue_t> v) const {
  std::vector<residue_t> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    residue_t x = w[pivots_[k]];
    if (x == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t c = pivots_[k]; c < n_; ++c)
      if (row[c]) w[c] = f_.sub(w[c], f_.mul(x, row[c]));
  }
  return w;
}

bool EchelonBasis::contains(std::span<const residue_t> v) const {
  auto w = reduced(v);
  return std::all_of(w.begin(), w.end(), [](residue_t x) { return x == 0; });
}

bool EchelonBasis::insert(std::span<const residue_t> v) {
  if (v.size() != n_) throw InputError("vector length does not match basis ambient dimension");
  auto w = reduced(v);
  auto it = std::find_if(w.begin(), w.end(), [](residue_t x) { return x != 0; });
  if (it == w.end()) return false;
  const std::size_t pc = static_cast<std::size_t>(it - w.begin());
  const residue_t inv = f_.inv(w[pc]);
  for (auto& x : w) x = f_.mul(x, inv);
  // keep the basis fully reduced so reduction order is irrelevant
  for (auto& row : rows_) {
    residue_t x = row[pc];
    if (x == 0) continue;
    for (std::size_t c = pc; c < n_; ++c)
      if (w[c]) row[c] = f_.sub(row[c], f_.mul(x, w[c]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
  std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pc);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(w));
  return true;
}

}  // namespace hcc
