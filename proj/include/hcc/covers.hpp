#pragma once

// Mod-p cellular chain complex of the regular cover X_N -> K_P determined by
// a homomorphism φ: π_1(K_P) -> H. Cells of X_N are indexed by (cell, h).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hcc/groupring.hpp"
#include "hcc/homomorphism.hpp"
#include "hcc/presentations.hpp"

namespace hcc {

/// |H| x |H| equivariant matrix stored by its identity row.
struct EquivariantBlock {
  GroupRingElement seed;

  FpMatrix materialize() const { return equivariant_matrix(seed); }
  bool balanced() const { return is_balanced(seed); }
};

using BettiTriple = std::array<std::size_t, 3>;

struct CoverComplex {
  Homomorphism hom;
  std::uint32_t p;
  /// blocks[i][j] = B_ij: weight of the lifts of a_j in the boundary of the
  /// lifts of R_i. Seed B_ij(e) = Σ (sign) δ_{φ(prefix)} over ∂R_i/∂a_j.
  std::vector<std::vector<EquivariantBlock>> blocks;
  FpMatrix d1;  // |H|n x |H|, row (j,g) = δ_{g φ(a_j)} - δ_g
  std::size_t rank_d1 = 0;
  std::size_t rank_d2 = 0;
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  std::size_t components = 0;  // |H| / |im φ|

  std::size_t hrk() const noexcept { return b0 + b1 + b2; }
  long long euler() const noexcept {
    return static_cast<long long>(b0) - static_cast<long long>(b1) + static_cast<long long>(b2);
  }
  BettiTriple betti() const noexcept { return {b0, b1, b2}; }
  /// |H|m x |H|n, row (i,g) = δ_g * B_ij(e) in column block j.
  FpMatrix d2() const;
};

/// Throws InputError if hom is defined on another presentation, CapError
/// above the matrix cap, std::logic_error if ∂₂∂₁ ≠ 0.
CoverComplex build_cover(const Presentation& pres, const Homomorphism& hom, std::uint32_t p);
CoverComplex build_cover(const Homomorphism& hom, std::uint32_t p);

/// is_balanced for each block B_ij, m x n.
std::vector<std::vector<bool>> check_balance_pattern(const CoverComplex& c);

struct HcVerdict {
  std::size_t r = 0;
  std::size_t hrk = 0;
  std::size_t lower = 0;  // 2^r
  bool passes = false;    // hrk >= 2^r
  bool equality = false;
  bool connected = false;
  BettiTriple base{};
  BettiTriple cover{};
  /// At equality: "a", "b", "c", "disconnected", or "unclassified". Empty otherwise.
  std::string equality_case;

  bool falsifying() const { return !passes || equality_case == "unclassified"; }
};

/// Requires the target to be (Z_p)^r for the cover's p; throws InputError otherwise.
HcVerdict hc_verdict(const CoverComplex& c);

/// Equality profiles (base, cover) for a connected cover with deck group (Z_p)^r:
/// (a) r=1: (1,1,0),(1,1,0); (b) r=1, p=2: (1,1,1),(1,0,1); (c) r=2: (1,2,1),(1,2,1).
/// Returns every case that matches.
std::vector<std::string> matching_equality_cases(std::uint32_t p, std::size_t r, const BettiTriple& base,
                                                 const BettiTriple& cover);

}  // namespace hcc
