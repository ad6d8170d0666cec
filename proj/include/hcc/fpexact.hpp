#pragma once

// Dense linear algebra over the prime field F_p.
//
// Matrices act on row vectors (v -> vM), so every kernel in this module is a
// left kernel: {v : vM = 0}, of dimension rows - rank.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hcc {

using residue_t = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Throws InputError unless p is a prime below 2^31.
void require_prime(std::uint64_t p);

/// Arithmetic in F_p. Values are always reduced into [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  residue_t reduce(std::int64_t v) const noexcept;
  residue_t add(residue_t a, residue_t b) const noexcept;
  residue_t sub(residue_t a, residue_t b) const noexcept;
  residue_t neg(residue_t a) const noexcept;
  residue_t mul(residue_t a, residue_t b) const noexcept;
  residue_t inv(residue_t a) const;  // a != 0

 private:
  std::uint32_t p_;
};

/// Upper bound on rows*cols for any FpMatrix. Initialised from the
/// HCC_MATRIX_CAP environment variable, default 1 << 22.
std::size_t matrix_cap();
void set_matrix_cap(std::size_t cap);

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  /// Entries are reduced mod p; all rows must have the same length.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }

  residue_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  std::span<const residue_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<residue_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  FpMatrix transpose() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<residue_t> data_;
};

std::size_t rank(const FpMatrix& m);

/// Dimension of the left kernel {v : vM = 0}.
std::size_t kernel_dim(const FpMatrix& m);

/// Rows form a basis of the left kernel {v : vM = 0}.
FpMatrix left_kernel_basis(const FpMatrix& m);

/// One of the two elementary transformation types used for Smith form.
///
/// Transvection T_ij(q): identity plus q at (row j, column i).
///   As a left factor it adds q * row i to row j.
///   As a right factor it adds q * column j to column i.
/// Swap S_ij exchanges rows (left) or columns (right) i and j.
struct ElementaryOp {
  enum class Kind { Transvection, Swap };
  Kind kind;
  std::size_t i;
  std::size_t j;
  residue_t q = 0;

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

void apply_left(FpMatrix& m, const ElementaryOp& op);
void apply_right(FpMatrix& m, const ElementaryOp& op);

struct SnfResult {
  std::vector<residue_t> diagonal;  // nonzero, not normalised to 1
  std::vector<ElementaryOp> left_ops;
  std::vector<ElementaryOp> right_ops;
  std::size_t rank = 0;
};

/// Reduces m to block-diag(D, 0) with transvections and swaps only.
/// Pivot: first nonzero entry of the remaining block, scanning column by column.
SnfResult smith_normal_form(const FpMatrix& m);

/// Applies the recorded operations of an SnfResult to m.
FpMatrix replay(const FpMatrix& m, const SnfResult& snf);

/// Incrementally maintained reduced row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, std::uint32_t p);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return pivots_.size(); }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(std::span<const residue_t> v);
  bool contains(std::span<const residue_t> v) const;
  std::vector<std::vector<residue_t>> vectors() const { return rows_; }

 private:
  std::vector<residue_t> reduced(std::span<const residue_t> v) const;

  std::size_t n_;
  PrimeField f_;
  std::vector<std::vector<residue_t>> rows_;
  std::vector<std::size_t> pivots_;  // pivot column of rows_[k]; rows_[k][pivot] == 1
};

}  // namespace hcc
