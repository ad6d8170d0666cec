#include "hcc/corpus.hpp"

namespace hcc {

const std::vector<NamedPresentation>& standard_presentations() {
  static const std::vector<NamedPresentation> list = {
      {"F1", "< a | >"},
      {"F2", "< a, b | >"},
      {"F3", "< a, b, c | >"},
      {"Z2", "< a, b | a b a^-1 b^-1 >"},
      {"klein", "< a, b | a b a b^-1 >"},
      {"genus2", "< a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1 >"},
      {"C2", "< a | a^2 >"},
      {"C3", "< a | a^3 >"},
      {"C4", "< a | a^4 >"},
  };
  return list;
}

std::vector<NamedTarget> standard_targets() {
  std::vector<NamedTarget> out;
  for (std::size_t r = 1; r <= 4; ++r) out.push_back({"(Z2)^" + std::to_string(r), make_elementary_abelian(2, r), 2});
  for (std::size_t r = 1; r <= 2; ++r) out.push_back({"(Z3)^" + std::to_string(r), make_elementary_abelian(3, r), 3});
  out.push_back({"Z4", make_cyclic(4), 2});
  return out;
}

std::vector<std::vector<element_t>> surjections(const Presentation& pres, const OrderedGroup& target,
                                                std::size_t limit) {
  std::vector<std::vector<element_t>> out;
  const std::size_t n = pres.n_generators(), hs = target.size();
  std::vector<element_t> images(n, 0);
  auto compatible = [&] {
    for (const FreeWord& rel : pres.relators) {
      element_t acc = target.identity();
      for (const Letter& l : rel.letters()) {
        const element_t x = images[l.gen];
        acc = target.mul(acc, l.exp == 1 ? x : target.inverse(x));
      }
      if (acc != target.identity()) return false;
    }
    return true;
  };
  for (;;) {
    if (compatible() && target.subgroup(images).size() == hs) {
      out.push_back(images);
      if (limit && out.size() >= limit) break;
    }
    std::size_t pos = n;
    while (pos > 0 && images[pos - 1] + 1 == hs) images[--pos] = 0;
    if (pos == 0) break;
    ++images[pos - 1];
  }
  return out;
}

std::vector<CorpusItem> standard_corpus() {
  std::vector<CorpusItem> out;
  for (const auto& np : standard_presentations()) {
    const Presentation pres = parse_presentation(np.text);
    for (const auto& t : standard_targets()) {
      const auto all = surjections(pres, t.group);
      if (all.empty()) continue;
      const std::string base = np.name + "/" + t.name;
      out.push_back({base + "#first", Homomorphism(pres, t.group, all.front()), t.p});
      if (all.size() > 1) out.push_back({base + "#last", Homomorphism(pres, t.group, all.back()), t.p});
    }
  }
  return out;
}

}  // namespace hcc
