#include "hcc/covers.hpp"

#include <stdexcept>

namespace hcc {

FpMatrix CoverComplex::d2() const {
  const std::size_t hs = hom.target().size();
  const std::size_t m = blocks.size(), n = hom.source().n_generators();
  FpMatrix out(hs * m, hs * n, p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const FpMatrix b = blocks[i][j].materialize();
      for (std::size_t g = 0; g < hs; ++g) {
        auto src = b.row(g);
        auto dst = out.row(i * hs + g);
        std::copy(src.begin(), src.end(), dst.begin() + static_cast<std::ptrdiff_t>(j * hs));
      }
    }
  return out;
}

CoverComplex build_cover(const Presentation& pres, const Homomorphism& hom, std::uint32_t p) {
  if (hom.source().generator_names != pres.generator_names || hom.source().relators != pres.relators)
    throw InputError("build_cover: homomorphism is defined on a different presentation");
  return build_cover(hom, p);
}

CoverComplex build_cover(const Homomorphism& hom, std::uint32_t p) {
  require_prime(p);
  const Presentation& pres = hom.source();
  const OrderedGroup& h = hom.target();
  const std::size_t hs = h.size(), n = pres.n_generators(), m = pres.n_relators();
  const PrimeField f(p);

  CoverComplex c{hom, p, {}, FpMatrix(hs * n, hs, p)};
  c.blocks.assign(m, {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<residue_t> seed(hs, 0);
      for (const FoxTerm& t : fox_derivative(pres.relators[i], j)) {
        const element_t x = hom.evaluate(t.prefix);
        seed[x] = t.sign > 0 ? f.add(seed[x], 1) : f.sub(seed[x], 1);
      }
      c.blocks[i].push_back({GroupRingElement(h, p, std::move(seed))});
    }

  for (std::size_t j = 0; j < n; ++j)
    for (element_t g = 0; g < hs; ++g) {
      const element_t end = h.mul(g, hom.images()[j]);
      if (end == g) continue;
      c.d1.set(j * hs + g, end, 1);
      c.d1.set(j * hs + g, g, -1);
    }

  const FpMatrix d2 = c.d2();
  if (d2.rows() && d2.cols() && !(d2 * c.d1).is_zero())
    throw std::logic_error("build_cover: boundary composition is nonzero");

  c.rank_d1 = rank(c.d1);
  c.rank_d2 = rank(d2);
  c.b0 = hs - c.rank_d1;
  c.b1 = hs * n - c.rank_d2 - c.rank_d1;
  c.b2 = hs * m - c.rank_d2;
  c.components = hs / hom.image().size();
  return c;
}

std::vector<std::vector<bool>> check_balance_pattern(const CoverComplex& c) {
  std::vector<std::vector<bool>> out;
  for (const auto& row : c.blocks) {
    std::vector<bool> r;
    for (const auto& b : row) r.push_back(b.balanced());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> matching_equality_cases(std::uint32_t p, std::size_t r, const BettiTriple& base,
                                                 const BettiTriple& cover) {
  std::vector<std::string> out;
  if (r == 1 && base == BettiTriple{1, 1, 0} && cover == BettiTriple{1, 1, 0}) out.push_back("a");
  if (r == 1 && p == 2 && base == BettiTriple{1, 1, 1} && cover == BettiTriple{1, 0, 1}) out.push_back("b");
  if (r == 2 && base == BettiTriple{1, 2, 1} && cover == BettiTriple{1, 2, 1}) out.push_back("c");
  return out;
}

HcVerdict hc_verdict(const CoverComplex& c) {
  const auto r = c.hom.target().elementary_abelian_rank(c.p);
  if (!r)
    throw InputError("hc_verdict: deck group " + c.hom.target().label() + " is not elementary abelian of exponent " +
                     std::to_string(c.p));
  HcVerdict v;
  v.r = *r;
  v.hrk = c.hrk();
  v.lower = std::size_t{1} << v.r;
  v.passes = v.hrk >= v.lower;
  v.equality = v.hrk == v.lower;
  v.connected = c.b0 == 1;
  const ComplexSummary base = complex_summary(c.hom.source(), c.p);
  v.base = {base.b0, base.b1, base.b2};
  v.cover = c.betti();
  if (v.equality && v.r >= 1) {
    if (!v.connected) {
      v.equality_case = "disconnected";
    } else {
      const auto cases = matching_equality_cases(c.p, v.r, v.base, v.cover);
      v.equality_case = cases.size() == 1 ? cases.front() : "unclassified";
    }
  }
  return v;
}

}  // namespace hcc
