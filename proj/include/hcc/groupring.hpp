#pragma once

// Finite ordered groups (H, I), the group ring F_p[H] and its augmentation
// ideal filtration F_p[H] = Δ^0 ⊇ Δ ⊇ Δ^2 ⊇ ...

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcc/fpexact.hpp"

namespace hcc {

using element_t = std::uint32_t;

/// A finite group whose total order is the index order 0..|H|-1.
/// Cheap to copy: the table is shared and immutable.
class OrderedGroup {
 public:
  /// The trivial group.
  OrderedGroup();

  /// Validates closure, associativity, identity and inverses.
  static OrderedGroup from_table(std::vector<std::vector<element_t>> table, std::string label,
                                 std::vector<std::string> element_names = {});

  std::size_t size() const noexcept { return d_->order; }
  element_t mul(element_t a, element_t b) const { return d_->table[a * d_->order + b]; }
  element_t identity() const noexcept { return d_->identity; }
  element_t inverse(element_t a) const { return d_->inverse[a]; }
  std::size_t element_order(element_t a) const;
  const std::string& label() const noexcept { return d_->label; }
  const std::string& element_name(element_t a) const { return d_->names[a]; }

  bool is_abelian() const;
  /// Some r with H ≅ (Z_p)^r, if H is elementary abelian of exponent p.
  std::optional<std::size_t> elementary_abelian_rank(std::uint32_t p) const;

  /// Greedy generating set: elements in index order that enlarge the
  /// generated subgroup.
  std::vector<element_t> generating_set() const;
  /// Elements of the subgroup generated by gens, ascending.
  std::vector<element_t> subgroup(std::span<const element_t> gens) const;

  /// Stable hash of the multiplication table.
  std::uint64_t table_hash() const noexcept { return d_->hash; }

  /// Same group with the total order permuted: new index k holds old
  /// element perm[k].
  OrderedGroup reordered(std::span<const element_t> perm) const;

  friend bool operator==(const OrderedGroup& a, const OrderedGroup& b) {
    return a.d_ == b.d_ || (a.d_->order == b.d_->order && a.d_->table == b.d_->table);
  }

 private:
  struct Data {
    std::size_t order = 0;
    element_t identity = 0;
    std::vector<element_t> table;
    std::vector<element_t> inverse;
    std::vector<std::string> names;
    std::string label;
    std::uint64_t hash = 0;
  };
  explicit OrderedGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  // Skips the O(|H|^3) associativity check for tables built from known groups.
  static OrderedGroup build(std::vector<std::vector<element_t>> table, std::string label,
                            std::vector<std::string> element_names, bool check_associativity);
  friend OrderedGroup make_elementary_abelian(std::uint32_t, std::size_t);
  friend OrderedGroup make_cyclic(std::size_t);
  friend OrderedGroup make_product(const OrderedGroup&, const OrderedGroup&);
  std::shared_ptr<const Data> d_;
};

/// (Z_p)^r, graded order: by coordinate sum, ties by descending
/// lexicographic order of the coordinate tuple. For p = 2 this is
/// 0 < e1 < e2 < ... < er < e1+e2 < e1+e3 < ...
OrderedGroup make_elementary_abelian(std::uint32_t p, std::size_t r);
/// Coordinate tuple of each element of make_elementary_abelian(p, r).
std::vector<std::vector<std::uint32_t>> elementary_abelian_coordinates(std::uint32_t p, std::size_t r);

OrderedGroup make_cyclic(std::size_t n);
/// Direct product, lexicographic order on pairs (a, b).
OrderedGroup make_product(const OrderedGroup& a, const OrderedGroup& b);

/// Text format: "order N" then N rows of N indices; identity is index 0.
OrderedGroup parse_group_table(std::string_view text, std::string label = "table");

/// Maximum group order accepted by the constructors (sqrt of matrix cap).
std::size_t group_cap();

class GroupRingElement {
 public:
  GroupRingElement(OrderedGroup group, std::uint32_t p);  // the zero element
  GroupRingElement(OrderedGroup group, std::uint32_t p, std::vector<residue_t> coeffs);
  static GroupRingElement delta(OrderedGroup group, std::uint32_t p, element_t h);
  /// -δ_e + δ_h
  static GroupRingElement augmentation_generator(OrderedGroup group, std::uint32_t p, element_t h);

  const OrderedGroup& group() const noexcept { return group_; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::span<const residue_t> coeffs() const noexcept { return coeffs_; }
  residue_t coeff(element_t h) const { return coeffs_[h]; }
  bool is_zero() const;

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement scaled(residue_t c) const;
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  OrderedGroup group_;
  std::uint32_t p_;
  std::vector<residue_t> coeffs_;
};

/// Convolution product: δ_g * δ_h = δ_{gh}.
GroupRingElement ring_mul(const GroupRingElement& u, const GroupRingElement& v);

/// Sum of coefficients in F_p.
residue_t augmentation(const GroupRingElement& v);

/// True iff v lies in the augmentation ideal.
bool is_balanced(const GroupRingElement& v);

/// |H| x |H| equivariant matrix with row g equal to δ_g * seed.
FpMatrix equivariant_matrix(const GroupRingElement& seed);

struct FiltrationProfile {
  std::uint32_t p = 0;
  OrderedGroup group;
  std::vector<std::size_t> delta_dims;  // dim Δ^k for k = 0..last computed
  std::vector<std::size_t> lambdas;     // delta_dims[k] - delta_dims[k+1]
  bool nilpotent = false;
  std::optional<std::size_t> stabilization_k;  // first k with Δ^k = Δ^{k+1}

  /// λ^k, zero past the computed range (the filtration is stable there).
  std::size_t lambda(std::size_t k) const { return k < lambdas.size() ? lambdas[k] : 0; }
  std::size_t delta_dim(std::size_t k) const {
    return k < delta_dims.size() ? delta_dims[k] : delta_dims.back();
  }
};

/// Dimensions of Δ^k_{F_p}(H), computed by spanning Δ^{k+1} from a basis of
/// Δ^k times (-δ_e + δ_s) over a generating set s of H. k_max = 0 means |H|.
/// Results are cached per (p, multiplication table).
FiltrationProfile filtration_profile(std::uint32_t p, const OrderedGroup& h, std::size_t k_max = 0);

/// Bases of Δ^0..Δ^K as echelon bases (K as in filtration_profile).
std::vector<EchelonBasis> filtration_bases(std::uint32_t p, const OrderedGroup& h, std::size_t k_max = 0);

}  // namespace hcc
