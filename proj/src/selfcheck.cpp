#include "hcc/selfcheck.hpp"

#include <functional>

#include "hcc/corpus.hpp"

namespace hcc {

namespace {

class Check {
 public:
  explicit Check(std::string name) { out_.name = std::move(name); }

  // Records the first failure only; later ones are counted.
  void fail(const std::string& detail, Json instance) {
    ++failures_;
    if (out_.ok) {
      out_.ok = false;
      out_.detail = detail;
      out_.offending = std::move(instance);
    }
  }
  void expect(bool cond, const std::string& detail, const std::function<Json()>& instance) {
    if (!cond) fail(detail, instance());
  }
  CheckOutcome finish(const std::string& summary) {
    if (out_.ok) out_.detail = summary;
    else if (failures_ > 1) out_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
    return out_;
  }

 private:
  CheckOutcome out_;
  std::size_t failures_ = 0;
};

std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
  std::vector<std::uint32_t> ps;
  for (std::uint32_t q = 2; q <= n; ++q)
    if (is_prime(q)) ps.push_back(q);
  return ps;
}

CheckOutcome check_torus_example() {
  Check c("torus-example");
  const Presentation pres = parse_presentation("< a, b | a b a^-1 b^-1 >");
  const Homomorphism hom = elementary_abelian_hom(pres, 2, 2, {{1, 0}, {0, 1}});
  const CoverComplex cov = build_cover(hom, 2);
  const FpMatrix expected = FpMatrix::from_rows(2, {{1, 0, 1, 0, 1, 1, 0, 0},
                                                    {0, 1, 0, 1, 1, 1, 0, 0},
                                                    {1, 0, 1, 0, 0, 0, 1, 1},
                                                    {0, 1, 0, 1, 0, 0, 1, 1}});
  c.expect(cov.d2() == expected, "boundary matrix differs from the worked example",
           [&] { return Json{{"d2", to_json(cov.d2())}}; });
  c.expect(cov.betti() == BettiTriple{1, 2, 1} && cov.hrk() == 4, "Betti numbers differ from (1,2,1)",
           [&] { return to_json(cov); });
  return c.finish("B = (B11, B12) reproduced, b = (1,2,1), hrk = 4");
}

CheckOutcome check_jennings() {
  Check c("jennings");
  std::size_t cases = 0;
  for (std::uint32_t p : primes_upto(128)) {
    std::size_t order = p;
    for (std::size_t r = 1; order <= 128; ++r, order *= p) {
      const FiltrationProfile prof = filtration_profile(p, make_elementary_abelian(p, r));
      const OmegaTable om = omega_by_convolution(p, r);
      bool same = prof.nilpotent && prof.lambdas.size() == om.coeffs.size();
      for (std::size_t k = 0; same && k < om.coeffs.size(); ++k) same = BigInt(prof.lambdas[k]) == om.coeffs[k];
      c.expect(same, "λ^k differs from |Ω^k| for p=" + std::to_string(p) + ", r=" + std::to_string(r), [&] {
        Json j = to_json(prof);
        Json om_j = Json::array();
        for (const auto& x : om.coeffs) om_j.push_back(to_json(x));
        j["omega"] = om_j;
        return j;
      });
      ++cases;
    }
  }
  return c.finish(std::to_string(cases) + " (p, r) pairs with p^r <= 128");
}

CheckOutcome check_omega_identities(SelfcheckReport& rep) {
  Check c("omega-identities");
  std::size_t shifted_on_previous = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::size_t r = 1; r <= 12; ++r) {
      const OmegaTable t = omega_by_convolution(p, r);
      const std::size_t deg = r * (p - 1);
      auto where = [&](const std::string& what, long long k) {
        return [=] { return Json{{"p", p}, {"r", r}, {"k", k}, {"property", what}}; };
      };
      BigInt sum = 0;
      for (const auto& x : t.coeffs) sum += x;
      c.expect(sum == boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(r)), "Σ|Ω^k| ≠ p^r",
               where("sum", -1));
      c.expect(t.coeffs[0] == 1 && t.coeffs[1] == r, "|Ω^0| ≠ 1 or |Ω^1| ≠ r", where("low terms", 1));
      const OmegaTable prev = r > 1 ? omega_by_convolution(p, r - 1) : OmegaTable{p, 0, {1}};
      for (std::size_t k = 0; k <= deg; ++k) {
        const long long kk = static_cast<long long>(k);
        c.expect(omega_by_alternating_sum(p, r, kk) == t.coeffs[k], "alternating sum disagrees",
                 where("alternating sum", kk));
        if (k >= 1 && k <= r)
          c.expect(omega_by_partitions(p, r, k) == t.coeffs[k], "partition formula disagrees",
                   where("partitions", kk));
        BigInt window = 0;
        for (std::size_t i = 0; i < p && i <= k; ++i) window += prev.at(kk - static_cast<long long>(i));
        c.expect(window == t.coeffs[k], "recursion fails", where("recursion", kk));
        c.expect(t.coeffs[k] == t.coeffs[deg - k], "symmetry fails", where("symmetry", kk));
        c.expect(t.coeffs[k] >= binomial(r, k), "|Ω^k_{p,r}| < C(r,k)", where("binomial floor", kk));
        if (r >= 2 && k <= deg / 2)
          c.expect(t.coeffs[k] > t.at(kk - 1), "not strictly increasing", where("unimodality", kk));
        c.expect(t.coeffs[k] <= t.coeffs[deg / 2], "maximum not at ⌊r(p-1)/2⌋", where("maximum", kk));
      }
      if (r >= 2) {
        // Shifted comparison on the rank-r table; the same comparison on the
        // rank-(r-1) table has counterexamples and is only counted.
        const std::size_t lo = r * (p - 1) / 2, hi = (r + 1) * (p - 1) / 2;
        for (std::size_t m = lo; m <= hi; ++m) {
          const long long mm = static_cast<long long>(m), shift = static_cast<long long>(p);
          c.expect(t.at(mm) > t.at(mm - shift), "shifted comparison fails", where("shifted comparison", mm));
          if (!(prev.at(mm) > prev.at(mm - shift))) ++shifted_on_previous;
        }
      }
      for (std::size_t m = 1; m <= r; ++m) {
        // |Ω^m|/|Ω^{m-1}| >= (r-m+1)/m, cross-multiplied
        const BigInt lhs = t.coeffs[m] * m, rhs = t.coeffs[m - 1] * (r - m + 1);
        const long long mm = static_cast<long long>(m);
        c.expect(lhs >= rhs, "ratio bound fails", where("ratio bound", mm));
        const bool equality_expected = p == 2 || m == 1;
        c.expect((lhs == rhs) == equality_expected, "ratio equality pattern differs", where("ratio equality", mm));
      }
    }
  if (shifted_on_previous)
    rep.notes.push_back("shifted comparison on the rank-(r-1) table fails in " + std::to_string(shifted_on_previous) +
                        " cases (first: p=2, r=3, m=2 gives 1 vs 1); it holds on the rank-r table");
  return c.finish("p in {2,3,5,7}, r <= 12: three formulas, recursion, symmetry, unimodality, ratio bound");
}

CheckOutcome check_inequalities(SelfcheckReport& rep) {
  Check c("inequalities");
  const InequalityReport ir = check_inequality_suite(30, {2, 3, 5, 7});
  auto first_row = [&](const std::string& fam) {
    return [&ir, fam] {
      Json rows = Json::array();
      for (const auto& row : ir.rows)
        if (row.family == fam && (!row.holds || row.equality)) rows.push_back(to_json(row));
      return rows;
    };
  };
  c.expect(ir.odd_central_ok, "odd-central fails or has equality outside t = 0", first_row("odd-central"));
  c.expect(ir.even_central_ok, "even-central fails or has equality outside t = 1", first_row("even-central"));
  c.expect(ir.rank_central_holds_from_4, "rank-central fails for some r >= 4", first_row("rank-central"));
  c.expect(ir.pi_midpoint_ok, "pi-midpoint fails or has equality outside r in {1,2}", first_row("pi-midpoint"));
  c.expect(ir.pi_top_ok, "top-of-table Π comparison fails", first_row("pi-top"));
  c.expect(ir.pi_argmax_ok, "smallest argmax of Π^k_{2,r} is not ⌊(r+1)/2⌋", first_row("pi-argmax"));
  if (!ir.rank_central_fails_below_4) {
    std::string rs;
    for (auto r : ir.rank_central_small_r_holding) rs += (rs.empty() ? "" : ",") + std::to_string(r);
    rep.notes.push_back("rank-central also holds for r = " + rs + " (equality); it fails only at r = 3 below 4");
  }
  if (!ir.pi_argmax_ties.empty()) {
    std::string rs;
    for (auto r : ir.pi_argmax_ties) rs += (rs.empty() ? "" : ",") + std::to_string(r);
    rep.notes.push_back("maximum of Π^k_{2,r} is attained twice for r = " + rs);
  }
  return c.finish("t <= 15, r <= 30, top Π comparison for p in {2,3,5,7}");
}

struct CorpusRun {
  CorpusItem item;
  CoverComplex cover;
  ComplexSummary base;
};

std::vector<CorpusRun> run_corpus() {
  std::vector<CorpusRun> out;
  for (auto& it : standard_corpus()) {
    CoverComplex cov = build_cover(it.hom, it.p);
    ComplexSummary base = complex_summary(it.hom.source(), it.p);
    out.push_back({it, std::move(cov), std::move(base)});
  }
  return out;
}

Json item_json(const CorpusRun& run) {
  Json j;
  j["item"] = run.item.name;
  j["presentation"] = format_presentation(run.item.hom.source());
  j["images"] = run.item.hom.images();
  j["cover"] = to_json(run.cover);
  return j;
}

CheckOutcome check_bound_soundness(const std::vector<CorpusRun>& runs) {
  Check c("bound-soundness");
  bool tight_z2 = false, tight_f2 = false;
  for (const auto& run : runs) {
    const auto& hom = run.item.hom;
    BoundReport br = bound_general(run.base.b1, hom.source().deficiency(), filtration_profile(run.item.p, hom.target()));
    br.attach_actual(run.cover.b1);
    c.expect(br.sound(), "b1 of the cover is below the bound for " + run.item.name, [&] {
      Json j = item_json(run);
      j["bound"] = to_json(br);
      return j;
    });
    if (run.item.name == "Z2/(Z2)^2#first") tight_z2 = br.tight.value_or(false);
    if (run.item.name == "F2/(Z2)^1#first") tight_f2 = br.tight.value_or(false);
    const auto r = hom.target().elementary_abelian_rank(run.item.p);
    if (r && hom.source().deficiency() == 1 && BigInt(run.cover.b1) == (BigInt(1) << (*r - 1)))
      c.expect(run.base.b1 == *r && *r <= 2, "b1(N) = 2^{r-1} with d = 1 but b1(G) ≠ r or r > 2",
               [&] { return item_json(run); });
  }
  c.expect(tight_z2, "bound not attained on Z^2 -> (Z_2)^2", [] { return Json("Z2/(Z2)^2#first"); });
  c.expect(tight_f2, "bound not attained on F_2 -> Z_2", [] { return Json("F2/(Z2)^1#first"); });
  return c.finish(std::to_string(runs.size()) + " corpus covers; tight on Z^2/(Z_2)^2 and F_2/Z_2");
}

CheckOutcome check_halperin_carlsson(const std::vector<CorpusRun>& runs) {
  Check c("hrk-lower-bound");
  std::size_t n = 0, eq = 0;
  for (const auto& run : runs) {
    if (!run.item.hom.target().elementary_abelian_rank(run.item.p)) continue;
    const HcVerdict v = hc_verdict(run.cover);
    ++n;
    if (v.equality) ++eq;
    c.expect(!v.falsifying(), "hrk < 2^r or unclassified equality for " + run.item.name, [&] {
      Json j = item_json(run);
      j["verdict"] = to_json(v);
      return j;
    });
  }
  return c.finish(std::to_string(n) + " elementary abelian covers, " + std::to_string(eq) + " equality cases classified");
}

CheckOutcome check_cover_invariants(const std::vector<CorpusRun>& runs) {
  Check c("cover-invariants");
  for (const auto& run : runs) {
    const auto& hom = run.item.hom;
    const long long hs = static_cast<long long>(hom.target().size());
    c.expect(run.cover.euler() == hs * run.base.euler, "Euler characteristic is not multiplicative for " + run.item.name,
             [&] { return item_json(run); });
    c.expect(run.cover.b0 == run.cover.components, "b0 differs from the number of components for " + run.item.name,
             [&] { return item_json(run); });
    if (hom.target().size() <= 8) {
      // reverse the total order of H
      std::vector<element_t> perm(hom.target().size());
      for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<element_t>(perm.size() - 1 - k);
      const OrderedGroup rev = hom.target().reordered(perm);
      std::vector<element_t> images;
      for (element_t x : hom.images()) images.push_back(static_cast<element_t>(perm.size() - 1 - x));
      const CoverComplex other = build_cover(Homomorphism(hom.source(), rev, images), run.item.p);
      c.expect(other.betti() == run.cover.betti(), "Betti numbers depend on the order of H for " + run.item.name,
               [&] { return item_json(run); });
    }
  }
  return c.finish("Euler characteristic, component count, order independence");
}

CheckOutcome check_reidemeister_schreier(const std::vector<CorpusRun>& runs) {
  Check c("reidemeister-schreier");
  std::size_t n = 0;
  for (const auto& run : runs) {
    const auto& hom = run.item.hom;
    if (hom.target().size() > 8) continue;
    const Presentation k = reidemeister_schreier(hom.source(), hom);
    const std::size_t idx = hom.image().size();
    const long long expected_def =
        static_cast<long long>(idx) * (static_cast<long long>(hom.source().n_generators()) - 1) + 1 -
        static_cast<long long>(idx * hom.source().n_relators());
    const std::size_t b1 = complex_summary(k, run.item.p).b1 * (hom.target().size() / idx);
    ++n;
    c.expect(b1 == run.cover.b1 && k.deficiency() == expected_def,
             "Schreier presentation disagrees with the cover for " + run.item.name, [&] {
               Json j = item_json(run);
               j["schreier"] = format_presentation(k);
               j["schreier_b1"] = b1;
               return j;
             });
  }
  return c.finish(std::to_string(n) + " covers with |H| <= 8");
}

CheckOutcome check_growth() {
  Check c("growth-iteration");
  const GrowthResult g = growth_iterate(parse_presentation("< a, b | >"), 2, 2);
  c.expect(g.ok(), "some stage violates b1 >= 2^{b1(prev)-1}", [&] { return to_json(g); });
  bool ns = g.stages.size() == 3;
  for (std::size_t i = 1; ns && i < g.stages.size(); ++i) {
    // free kernel of index q in a free group of rank n has rank 1 + q(n-1)
    const BigInt q = g.stages[i].index / g.stages[i - 1].index;
    ns = BigInt(g.stages[i].b1) == 1 + q * (BigInt(g.stages[i - 1].b1) - 1);
  }
  c.expect(ns, "stages disagree with the Nielsen-Schreier rank", [&] { return to_json(g); });
  return c.finish("F_2, p = 2: b1 sequence 2, 5, 129");
}

CheckOutcome check_elementary_bounds() {
  Check c("elementary-abelian-bounds");
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t r = 1; r <= 12; ++r) {
      const BoundReport d1 = bound_elementary_abelian(r, 1, p, r);
      c.expect(d1.best >= (BigInt(1) << (r - 1)), "d = 1 bound below 2^{r-1}", [&] { return to_json(d1); });
      const BoundReport d0 = bound_elementary_abelian(r, 0, p, r);
      const OmegaTable t = omega_by_convolution(p, r);
      const BigInt mid = 1 + BigInt(r) * t.coeffs[r * (p - 1) / 2] -
                         boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(r));
      c.expect(d0.best >= mid, "d = 0 bound below the middle coefficient form", [&] { return to_json(d0); });
      if (boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(r)) <= 128) {
        const BoundReport g = bound_general(r, 1, filtration_profile(p, make_elementary_abelian(p, r)));
        c.expect(g.per_k == d1.per_k, "general and elementary abelian bounds disagree", [&] { return to_json(g); });
      }
    }
  return c.finish("p in {2,3,5}, r <= 12");
}

CheckOutcome guarded(const std::string& name, const std::function<CheckOutcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return CheckOutcome{name, false, std::string("exception: ") + e.what(), Json(nullptr)};
  }
}

}  // namespace

SelfcheckReport run_selfcheck() {
  SelfcheckReport rep;
  rep.checks.push_back(guarded("torus-example", check_torus_example));
  rep.checks.push_back(guarded("jennings", check_jennings));
  rep.checks.push_back(guarded("omega-identities", [&] { return check_omega_identities(rep); }));
  rep.checks.push_back(guarded("inequalities", [&] { return check_inequalities(rep); }));
  rep.checks.push_back(guarded("elementary-abelian-bounds", check_elementary_bounds));
  std::vector<CorpusRun> runs;
  try {
    runs = run_corpus();
  } catch (const std::exception& e) {
    rep.checks.push_back({"corpus", false, std::string("exception: ") + e.what(), Json(nullptr)});
  }
  rep.checks.push_back(guarded("bound-soundness", [&] { return check_bound_soundness(runs); }));
  rep.checks.push_back(guarded("hrk-lower-bound", [&] { return check_halperin_carlsson(runs); }));
  rep.checks.push_back(guarded("cover-invariants", [&] { return check_cover_invariants(runs); }));
  rep.checks.push_back(guarded("reidemeister-schreier", [&] { return check_reidemeister_schreier(runs); }));
  rep.checks.push_back(guarded("growth-iteration", check_growth));
  return rep;
}

Json to_json(const SelfcheckReport& r) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}};
    if (!c.ok) e["offending"] = c.offending;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["notes"] = r.notes;
  j["ok"] = r.ok();
  return j;
}

}  // namespace hcc
