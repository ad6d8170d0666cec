#pragma once

// Lower bounds on b_1(N;F_p) for a normal subgroup N with G/N ≅ H, and the
// verdict tables built on them.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcc/groupring.hpp"
#include "hcc/homomorphism.hpp"
#include "hcc/omega.hpp"
#include "hcc/presentations.hpp"

namespace hcc {

struct BoundReport {
  std::uint32_t p = 0;
  std::string group_label;
  std::size_t group_order = 0;
  std::size_t b1_G = 0;
  long long d = 0;  // witness deficiency of the presentation used
  std::vector<BigInt> lambdas;
  /// per_k[k] = 1 + b1_G λ^k + d Σ_{j<k} λ^j - |H|
  std::vector<BigInt> per_k;
  std::size_t best_k = 0;  // smallest k attaining the maximum
  BigInt best;
  std::optional<std::size_t> actual_b1;
  std::optional<bool> tight;

  /// Records an exact b_1(N;F_p); returns false if it violates the bound.
  bool attach_actual(std::size_t b1_N);
  bool sound() const { return !actual_b1 || BigInt(*actual_b1) >= best; }
};

/// Throws InputError when b1_G < d, which no presentation can witness.
BoundReport bound_general(std::size_t b1_G, long long d, const FiltrationProfile& profile);

/// Same formula with λ^k = |Ω^k_{p,r}|, k = 0..r(p-1). For p = 2 the per-k
/// values are cross-checked against 1 + b1_G C(r,k) + d Σ_{j<k} C(r,j) - 2^r.
BoundReport bound_elementary_abelian(std::size_t b1_G, long long d, std::uint32_t p, std::size_t r);

/// Common core: per-k bounds from an explicit λ sequence.
BoundReport bound_from_lambdas(std::size_t b1_G, long long d, std::uint32_t p, std::string label,
                               std::size_t order, std::vector<BigInt> lambdas);

struct ManifoldProfile {
  std::string label;
  std::array<std::size_t, 4> q;  // Betti numbers of the base over F_2
  std::array<std::size_t, 4> m;  // Betti numbers of the cover over F_2
};

/// Free (Z_2)^r action on a closed 3-manifold M with quotient Q.
struct Manifold3Verdict {
  std::size_t r = 0;
  std::size_t b1_Q = 0;
  BigInt bound;   // 1 + b1_Q C(r,⌊r/2⌋) - 2^r
  BigInt needed;  // 2^{r-1} - 1, enough for hrk(M) >= 2^r
  bool certified_by_bound = false;
  bool requires_citation = false;  // bound alone does not certify
  std::optional<ManifoldProfile> equality_profile;  // only r <= 3 admits equality
};

/// Throws InputError for r = 0 or b1_Q < r.
Manifold3Verdict verdict_3manifold_z2(std::size_t b1_Q, std::size_t r);

/// Equality profiles for a free (Z_p)^r action on a closed 3-manifold whose
/// quotient group has a presentation of deficiency >= 1.
std::optional<ManifoldProfile> deficiency_one_equality_profile(std::uint32_t p, std::size_t r);

struct GrowthStage {
  std::size_t stage = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;
  long long deficiency = 0;
  std::size_t b1 = 0;
  BigInt index;  // index of this stage's group in the original
  std::optional<BigInt> required;  // 2^{b1 of previous stage - 1} when applicable
  bool meets_requirement = true;
};

struct GrowthResult {
  std::vector<GrowthStage> stages;
  bool truncated = false;  // stopped at the size cap
  std::string truncation_reason;
  bool ok() const {
    for (const auto& s : stages)
      if (!s.meets_requirement) return false;
    return true;
  }
};

/// G_0 = G; G_{i+1} = kernel of G_i -> (Z_p)^{b1(G_i)} (mod-p abelianization).
/// Stops after `steps` kernels, at b1 = 0, or when the next cover would exceed
/// the matrix cap. Throws InputError if the deficiency is < 1.
GrowthResult growth_iterate(const Presentation& pres, std::uint32_t p, std::size_t steps);

/// Homomorphism onto (Z_p)^{b1} sending a_j to (y_1[j], ..., y_b1[j]) for a
/// basis y of the left kernel of A.
Homomorphism mod_p_abelianization(const Presentation& pres, std::uint32_t p);

}  // namespace hcc
