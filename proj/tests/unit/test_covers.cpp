#include <doctest.h>

#include "hcc/corpus.hpp"
#include "hcc/covers.hpp"
#include "hcc/error.hpp"
#include "hcc/homomorphism.hpp"

using namespace hcc;

namespace {

BettiTriple betti_of(const char* text, const OrderedGroup& h, std::vector<element_t> images, std::uint32_t p) {
  const Presentation pres = parse_presentation(text);
  return build_cover(Homomorphism(pres, h, std::move(images)), p).betti();
}

}  // namespace

TEST_CASE("torus over (Z_2)^2 matches the explicit boundary matrix") {
  const Presentation torus = parse_presentation("< a, b | a b a^-1 b^-1 >");
  const auto c = build_cover(elementary_abelian_hom(torus, 2, 2, {{1, 0}, {0, 1}}), 2);
  const FpMatrix want = FpMatrix::from_rows(2, {{1, 0, 1, 0, 1, 1, 0, 0},
                                                {0, 1, 0, 1, 1, 1, 0, 0},
                                                {1, 0, 1, 0, 0, 0, 1, 1},
                                                {0, 1, 0, 1, 0, 0, 1, 1}});
  CHECK(c.d2() == want);
  CHECK(c.rank_d2 == 3);
  CHECK(c.betti() == BettiTriple{1, 2, 1});
  CHECK(c.hrk() == 4);
  CHECK(c.euler() == 0);
}

TEST_CASE("cover Betti numbers") {
  const OrderedGroup v4 = make_elementary_abelian(2, 2);
  CHECK(betti_of("< a | a^2 >", make_cyclic(2), {1}, 2) == BettiTriple{1, 0, 1});
  CHECK(betti_of("< a, b | a b a b^-1 >", make_cyclic(3), {0, 1}, 3) == BettiTriple{1, 1, 0});
  CHECK(betti_of("< a, b | >", v4, {1, 1}, 2) == BettiTriple{2, 6, 0});
  CHECK(betti_of("< a, b | >", make_cyclic(2), {1, 0}, 2) == BettiTriple{1, 3, 0});
  CHECK(betti_of("< a, b | a b a^-1 b^-1 >", make_cyclic(4), {1, 0}, 2) == BettiTriple{1, 2, 1});
  const Presentation g2 = parse_presentation("< a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1 >");
  const auto c = build_cover(elementary_abelian_hom(g2, 2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), 2);
  CHECK(c.betti() == BettiTriple{1, 34, 1});
}

TEST_CASE("blocks are equivariant and balanced exactly where the exponent sum vanishes") {
  for (const auto& item : standard_corpus()) {
    if (item.hom.target().size() > 9) continue;
    CAPTURE(item.name);
    const auto c = build_cover(item.hom, item.p);
    const auto a = complex_summary(item.hom.source(), item.p).boundary_A;
    const auto pattern = check_balance_pattern(c);
    const OrderedGroup& h = item.hom.target();
    for (std::size_t i = 0; i < pattern.size(); ++i)
      for (std::size_t j = 0; j < pattern[i].size(); ++j) {
        CHECK(pattern[i][j] == (a.at(j, i) == 0));
        const FpMatrix b = c.blocks[i][j].materialize();
        for (element_t g = 0; g < h.size(); ++g)
          for (element_t x = 0; x < h.size(); ++x)
            CHECK(b.at(h.mul(g, x), h.mul(g, 0)) == b.at(x, 0));
      }
    CHECK(c.euler() == static_cast<long long>(h.size()) * complex_summary(item.hom.source(), item.p).euler);
    CHECK(c.b0 == c.components);
  }
}

TEST_CASE("verdicts") {
  const Presentation torus = parse_presentation("< a, b | a b a^-1 b^-1 >");
  const auto v = hc_verdict(build_cover(elementary_abelian_hom(torus, 2, 2, {{1, 0}, {0, 1}}), 2));
  CHECK(v.r == 2);
  CHECK(v.lower == 4);
  CHECK(v.passes);
  CHECK(v.equality);
  CHECK(v.equality_case == "c");
  CHECK_FALSE(v.falsifying());

  const Presentation rp2 = parse_presentation("< a | a^2 >");
  const auto w = hc_verdict(build_cover(Homomorphism(rp2, make_cyclic(2), {1}), 2));
  CHECK(w.equality_case == "b");

  const Presentation circle = parse_presentation("< a | >");
  const auto u = hc_verdict(build_cover(Homomorphism(circle, make_elementary_abelian(3, 1), {1}), 3));
  CHECK(u.equality_case == "a");

  const Presentation f2 = parse_presentation("< a, b | >");
  const auto d = hc_verdict(build_cover(elementary_abelian_hom(f2, 2, 2, {{1, 0}, {1, 0}}), 2));
  CHECK_FALSE(d.connected);
  CHECK(d.passes);

  CHECK_THROWS_AS(hc_verdict(build_cover(Homomorphism(torus, make_cyclic(4), {1, 0}), 2)), InputError);

  for (const auto& item : standard_corpus()) {
    if (!item.hom.target().elementary_abelian_rank(item.p)) continue;
    CAPTURE(item.name);
    CHECK_FALSE(hc_verdict(build_cover(item.hom, item.p)).falsifying());
  }
}

TEST_CASE("incompatible homomorphisms name the relator") {
  const Presentation torus = parse_presentation("< a, b | a^2, a b a^-1 b^-1 >");
  try {
    Homomorphism(torus, make_cyclic(3), {1, 0});
    FAIL("expected IncompatibleHomomorphism");
  } catch (const IncompatibleHomomorphism& e) {
    CHECK(e.relator() == 0);
  }
  CHECK_THROWS_AS(elementary_abelian_hom(torus, 2, 1, {{1}}), InputError);
  CHECK_THROWS_AS(Homomorphism(torus, make_cyclic(2), {0, 5}), InputError);
}

TEST_CASE("homomorphism parsing") {
  const Presentation torus = parse_presentation("< a, b | a b a^-1 b^-1 >");
  const OrderedGroup v4 = make_elementary_abelian(2, 2);
  const auto coords = elementary_abelian_coordinates(2, 2);
  const Homomorphism h = parse_homomorphism("a -> (1,0)\nb -> (0,1)\n", torus, v4, &coords);
  CHECK(h.images() == std::vector<element_t>{1, 2});
  CHECK(h.is_surjective());
  CHECK(parse_homomorphism("a -> 3\nb -> 0", torus, v4).images() == std::vector<element_t>{3, 0});
  CHECK_THROWS_AS(parse_homomorphism("a -> 1", torus, v4), InputError);
  CHECK_THROWS_AS(parse_homomorphism("a -> 1\na -> 2\nb -> 0", torus, v4), InputError);
  CHECK_THROWS_AS(parse_homomorphism("a -> 1\nc -> 2\nb -> 0", torus, v4), InputError);
  CHECK_THROWS_AS(parse_homomorphism("a -> (1,0,0)\nb -> (0,1)", torus, v4, &coords), InputError);
}
