#include <doctest.h>

#include <algorithm>
#include <array>

#include "hcc/corpus.hpp"
#include "hcc/covers.hpp"
#include "hcc/error.hpp"
#include "hcc/homomorphism.hpp"
#include "hcc/presentations.hpp"

using namespace hcc;

namespace {

OrderedGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> a{0, 1, 2};
  do perms.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  std::vector<std::vector<element_t>> table(6, std::vector<element_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
      table[x][y] = static_cast<element_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return OrderedGroup::from_table(table, "S3");
}

std::string fmt(const FreeWord& w) { return format_word(w, {"a", "b", "c"}); }

}  // namespace

TEST_CASE("free word reduction") {
  FreeWord w = FreeWord::generator(0) * FreeWord::generator(1) * FreeWord::generator(1, -1);
  CHECK(w == FreeWord::generator(0));
  CHECK(FreeWord::generator(0).power(3).length() == 3);
  CHECK(FreeWord::generator(0).power(-2) == FreeWord::generator(0, -1).power(2));
  const FreeWord x = FreeWord::from_letters({{0, 1}, {1, 1}, {0, -1}});
  CHECK((x * x.inverse()).empty());
  CHECK(x.exponent_sum(0) == 0);
  CHECK(x.exponent_sum(1) == 1);
  CHECK_THROWS(FreeWord::generator(0, 2));
}

TEST_CASE("parsing") {
  const Presentation t = parse_presentation("< a, b | a b a^-1 b^-1 >");
  CHECK(t.n_generators() == 2);
  CHECK(t.n_relators() == 1);
  CHECK(t.deficiency() == 1);
  CHECK(format_presentation(t) == "< a, b | a b a^-1 b^-1 >");

  const Presentation c = parse_presentation("# cyclic\n<x|x^5, 1>\n");
  CHECK(c.n_relators() == 2);
  CHECK(c.relators[1].empty());
  CHECK(format_presentation(c) == "< x | x^5, 1 >");

  CHECK(parse_presentation("< a, b | >").n_relators() == 0);
  CHECK(parse_presentation("< a | a a^-1 >").relators[0].empty());
}

TEST_CASE("parse errors report positions") {
  try {
    parse_presentation("< a |\n  a c >");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
    CHECK(std::string(e.what()).find("unknown generator 'c'") != std::string::npos);
  }
  try {
    parse_presentation("< a, a | >");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_presentation("< a | a "), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a^ >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a^2000000 >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | , a >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a 1 >"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a > x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("a | a"), InputError);
}

TEST_CASE("Fox derivatives") {
  const FreeWord r = parse_presentation("< a, b, c | a b a^-1 b^-1 >").relators[0];
  const auto da = fox_derivative(r, 0);
  REQUIRE(da.size() == 2);
  CHECK(da[0].sign == 1);
  CHECK(da[0].prefix.empty());
  CHECK(da[1].sign == -1);
  CHECK(fmt(da[1].prefix) == "a b a^-1");
  const auto db = fox_derivative(r, 1);
  REQUIRE(db.size() == 2);
  CHECK(fmt(db[0].prefix) == "a");
  CHECK(db[1].sign == -1);
  CHECK(fmt(db[1].prefix) == "a b a^-1 b^-1");
  CHECK(fox_derivative(r, 2).empty());

  // ∂(a^3)/∂a = 1 + a + a^2
  const auto dp = fox_derivative(FreeWord::generator(0).power(3), 0);
  REQUIRE(dp.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(dp[k].sign == 1);
    CHECK(dp[k].prefix.length() == k);
  }
}

TEST_CASE("mod p homology of the presentation complex") {
  const auto torus = complex_summary(parse_presentation("< a, b | a b a^-1 b^-1 >"), 2);
  CHECK(torus.b1 == 2);
  CHECK(torus.b2 == 1);
  CHECK(torus.euler == 0);
  const Presentation rp2 = parse_presentation("< a | a^2 >");
  const auto s2 = complex_summary(rp2, 2);
  CHECK(s2.b1 == 1);
  CHECK(s2.b2 == 1);
  const auto s3 = complex_summary(rp2, 3);
  CHECK(s3.b1 == 0);
  CHECK(s3.b2 == 0);
  CHECK(s3.euler == 1);
  CHECK(s3.boundary_A.at(0, 0) == 2);
  for (const auto& np : standard_presentations())
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto s = complex_summary(parse_presentation(np.text), p);
      CHECK(static_cast<long long>(s.b0) - static_cast<long long>(s.b1) + static_cast<long long>(s.b2) == s.euler);
    }
}

TEST_CASE("normalization") {
  SUBCASE("worked example") {
    const Presentation pres = parse_presentation("< a, b | a b, b >");
    const auto tr = normalize_with_trace(pres, 5);
    CHECK(tr.snf.rank == 2);
    const auto s = complex_summary(tr.presentation, 5);
    CHECK(s.boundary_A == FpMatrix::identity(2, 5));
  }
  SUBCASE("normal form and group identity") {
    const OrderedGroup s3 = symmetric3();
    const std::vector<std::string> texts = {"< a, b | a^2, b^3, a b a b >", "< a, b | a^2, b^2, a b a b a b >",
                                            "< a, b, c | a^2, b^3, a b a b, c a c^-1 a^-1 >"};
    for (const auto& text : texts) {
      const Presentation pres = parse_presentation(text);
      for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto tr = normalize_with_trace(pres, p);
        const auto a = complex_summary(tr.presentation, p).boundary_A;
        for (std::size_t j = 0; j < a.rows(); ++j)
          for (std::size_t i = 0; i < a.cols(); ++i)
            CHECK(a.at(j, i) == ((i == j && i < tr.snf.rank) ? tr.snf.diagonal[i] : 0));
        CHECK(complex_summary(tr.presentation, p).b1 == complex_summary(pres, p).b1);
        // Any surjection onto S3 induces one from the normalized presentation.
        for (const auto& images : hcc::surjections(pres, s3, 4)) {
          const Homomorphism phi(pres, s3, images);
          std::vector<element_t> psi;
          for (const FreeWord& w : tr.generator_words) psi.push_back(phi.evaluate(w));
          const Homomorphism induced(tr.presentation, s3, psi);
          CHECK(induced.is_surjective());
        }
      }
    }
  }
}

TEST_CASE("Reidemeister-Schreier rewriting") {
  const Presentation f2 = parse_presentation("< a, b | >");
  const Presentation sub = reidemeister_schreier(f2, Homomorphism(f2, make_cyclic(2), {1, 0}));
  CHECK(sub.n_generators() == 3);
  CHECK(sub.n_relators() == 0);

  const Presentation torus = parse_presentation("< a, b | a b a^-1 b^-1 >");
  const auto hom = elementary_abelian_hom(torus, 2, 2, {{1, 0}, {0, 1}});
  const Presentation k = reidemeister_schreier(torus, hom);
  CHECK(k.n_generators() == 5);
  CHECK(k.n_relators() == 4);
  CHECK(complex_summary(k, 2).b1 == 2);
  for (const auto& name : k.generator_names) CHECK((name.rfind("a_", 0) == 0 || name.rfind("b_", 0) == 0));

  // b1 of the rewritten presentation equals b1 of the connected cover
  for (const auto& item : standard_corpus()) {
    if (item.hom.target().size() > 8 || !item.hom.is_surjective()) continue;
    const Presentation rs = reidemeister_schreier(item.hom.source(), item.hom);
    const auto cover = build_cover(item.hom, item.p);
    CAPTURE(item.name);
    CHECK(complex_summary(rs, item.p).b1 == cover.b1);
    CHECK(rs.deficiency() - 1 ==
          static_cast<long long>(item.hom.target().size()) * (item.hom.source().deficiency() - 1));
  }
}
