#include "hcc/bounds.hpp"

#include <limits>
#include <stdexcept>

namespace hcc {

bool BoundReport::attach_actual(std::size_t b1_N) {
  actual_b1 = b1_N;
  tight = BigInt(b1_N) == best;
  return sound();
}

BoundReport bound_from_lambdas(std::size_t b1_G, long long d, std::uint32_t p, std::string label,
                               std::size_t order, std::vector<BigInt> lambdas) {
  if (d > 0 && static_cast<std::size_t>(d) > b1_G)
    throw InputError("bounds: b1(G;F_p) = " + std::to_string(b1_G) + " is smaller than the witness deficiency " +
                     std::to_string(d) + "; no presentation has these values");
  if (lambdas.empty()) throw InputError("bounds: empty lambda sequence");
  BoundReport rep;
  rep.p = p;
  rep.group_label = std::move(label);
  rep.group_order = order;
  rep.b1_G = b1_G;
  rep.d = d;
  rep.lambdas = std::move(lambdas);
  BigInt partial = 0;  // Σ_{j<k} λ^j
  for (std::size_t k = 0; k < rep.lambdas.size(); ++k) {
    BigInt v = 1 + BigInt(b1_G) * rep.lambdas[k] + BigInt(d) * partial - BigInt(order);
    if (k == 0 || v > rep.best) {
      rep.best = v;
      rep.best_k = k;
    }
    rep.per_k.push_back(std::move(v));
    partial += rep.lambdas[k];
  }
  return rep;
}

BoundReport bound_general(std::size_t b1_G, long long d, const FiltrationProfile& profile) {
  std::vector<BigInt> lambdas(profile.lambdas.begin(), profile.lambdas.end());
  return bound_from_lambdas(b1_G, d, profile.p, profile.group.label(), profile.group.size(), std::move(lambdas));
}

BoundReport bound_elementary_abelian(std::size_t b1_G, long long d, std::uint32_t p, std::size_t r) {
  OmegaTable t = omega_by_convolution(p, r);
  BigInt order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(r));
  if (order > BigInt(std::numeric_limits<std::size_t>::max() / 2))
    throw CapError("bounds: p^r too large");
  BoundReport rep = bound_from_lambdas(b1_G, d, p, "(Z_" + std::to_string(p) + ")^" + std::to_string(r),
                                       static_cast<std::size_t>(order), t.coeffs);
  if (p == 2) {
    BigInt partial = 0;
    for (std::size_t k = 0; k <= r; ++k) {
      const BigInt c = binomial(r, k);
      if (rep.per_k[k] != 1 + BigInt(b1_G) * c + BigInt(d) * partial - order)
        throw std::logic_error("bounds: binomial form disagrees at k = " + std::to_string(k));
      partial += c;
    }
  }
  return rep;
}

Manifold3Verdict verdict_3manifold_z2(std::size_t b1_Q, std::size_t r) {
  if (r == 0) throw InputError("verdict: r must be at least 1");
  if (b1_Q < r) throw InputError("verdict: b1(Q;F_2) must be at least r for a (Z_2)^r quotient");
  Manifold3Verdict v;
  v.r = r;
  v.b1_Q = b1_Q;
  v.bound = 1 + BigInt(b1_Q) * binomial(r, r / 2) - (BigInt(1) << r);
  v.needed = (BigInt(1) << (r - 1)) - 1;
  v.certified_by_bound = v.bound >= v.needed;
  v.requires_citation = !v.certified_by_bound;
  switch (r) {
    case 1: v.equality_profile = ManifoldProfile{"a", {1, 1, 1, 1}, {1, 0, 0, 1}}; break;
    case 2: v.equality_profile = ManifoldProfile{"b", {1, 2, 2, 1}, {1, 1, 1, 1}}; break;
    case 3: v.equality_profile = ManifoldProfile{"c", {1, 3, 3, 1}, {1, 3, 3, 1}}; break;
    default: break;
  }
  return v;
}

std::optional<ManifoldProfile> deficiency_one_equality_profile(std::uint32_t p, std::size_t r) {
  if (p == 2) return std::nullopt;
  if (r == 1) return ManifoldProfile{"a", {1, 1, 0, 0}, {1, 1, 0, 0}};
  if (r == 2) return ManifoldProfile{"b", {1, 2, 1, 0}, {1, 2, 1, 0}};
  return std::nullopt;
}

Homomorphism mod_p_abelianization(const Presentation& pres, std::uint32_t p) {
  const ComplexSummary s = complex_summary(pres, p);
  const FpMatrix y = left_kernel_basis(s.boundary_A);
  std::vector<std::vector<std::int64_t>> coords(pres.n_generators(), std::vector<std::int64_t>(y.rows()));
  for (std::size_t k = 0; k < y.rows(); ++k)
    for (std::size_t j = 0; j < pres.n_generators(); ++j) coords[j][k] = y.at(k, j);
  return elementary_abelian_hom(pres, p, y.rows(), coords);
}

GrowthResult growth_iterate(const Presentation& pres, std::uint32_t p, std::size_t steps) {
  require_prime(p);
  if (pres.deficiency() < 1)
    throw InputError("iterate: the presentation has deficiency " + std::to_string(pres.deficiency()) +
                     "; at least 1 is required");
  GrowthResult out;
  Presentation cur = pres;
  BigInt index = 1;
  GrowthStage s0;
  s0.generators = cur.n_generators();
  s0.relators = cur.n_relators();
  s0.deficiency = cur.deficiency();
  s0.b1 = complex_summary(cur, p).b1;
  s0.index = index;
  out.stages.push_back(s0);

  for (std::size_t step = 1; step <= steps; ++step) {
    const GrowthStage& prev = out.stages.back();
    if (prev.b1 == 0) break;
    const BigInt order = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(prev.b1));
    const BigInt gens = order * (BigInt(prev.generators) - 1) + 1;
    const BigInt rels = order * BigInt(prev.relators);
    if (order > BigInt(group_cap()) || gens * rels > BigInt(matrix_cap())) {
      out.truncated = true;
      out.truncation_reason = "stage " + std::to_string(step) + " needs a quotient of order " + order.str() +
                              " and a presentation with " + gens.str() + " generators; above the size cap";
      break;
    }
    Presentation next = reidemeister_schreier(cur, mod_p_abelianization(cur, p));
    GrowthStage s;
    s.stage = step;
    s.generators = next.n_generators();
    s.relators = next.n_relators();
    s.deficiency = next.deficiency();
    s.b1 = complex_summary(next, p).b1;
    index *= order;
    s.index = index;
    if (prev.deficiency >= 1) {
      s.required = BigInt(1) << (prev.b1 - 1);
      s.meets_requirement = BigInt(s.b1) >= *s.required;
    }
    out.stages.push_back(s);
    cur = std::move(next);
  }
  return out;
}

}  // namespace hcc
