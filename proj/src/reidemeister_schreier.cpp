#include <deque>
#include <limits>

#include "hcc/homomorphism.hpp"
#include "hcc/presentations.hpp"

namespace hcc {

Presentation reidemeister_schreier(const Presentation& pres, const Homomorphism& hom) {
  const OrderedGroup& h = hom.target();
  const std::size_t n = pres.n_generators();
  if (hom.source().generator_names != pres.generator_names || hom.source().relators != pres.relators)
    throw InputError("reidemeister_schreier: homomorphism is defined on a different presentation");

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  // coset_pos[g] = position of g in im(hom), or kNone
  std::vector<std::size_t> coset_pos(h.size(), kNone);
  const auto& cosets = hom.image();
  for (std::size_t k = 0; k < cosets.size(); ++k) coset_pos[cosets[k]] = k;

  // tree[c][j]: edge c --a_j--> c·φ(a_j) belongs to the spanning tree
  std::vector<std::vector<bool>> tree(h.size(), std::vector<bool>(n, false));
  std::vector<bool> seen(h.size(), false);
  std::deque<element_t> queue{h.identity()};
  seen[h.identity()] = true;
  while (!queue.empty()) {
    const element_t c = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      const element_t x = hom.images()[j];
      const element_t fwd = h.mul(c, x);
      if (!seen[fwd]) {
        seen[fwd] = true;
        tree[c][j] = true;
        queue.push_back(fwd);
      }
      const element_t back = h.mul(c, h.inverse(x));
      if (!seen[back]) {
        seen[back] = true;
        tree[back][j] = true;
        queue.push_back(back);
      }
    }
  }

  Presentation out;
  // gen_index[c][j] = index of s_{c,j} in out, or kNone on tree edges
  std::vector<std::vector<std::size_t>> gen_index(h.size(), std::vector<std::size_t>(n, kNone));
  for (element_t c : cosets)
    for (std::size_t j = 0; j < n; ++j)
      if (!tree[c][j]) {
        gen_index[c][j] = out.generator_names.size();
        out.generator_names.push_back(pres.generator_names[j] + "_" + std::to_string(c));
      }

  for (element_t c0 : cosets)
    for (const FreeWord& rel : pres.relators) {
      FreeWord w;
      element_t c = c0;
      for (const Letter& l : rel.letters()) {
        const element_t x = hom.images()[l.gen];
        if (l.exp == 1) {
          if (gen_index[c][l.gen] != kNone) w.push_back({gen_index[c][l.gen], 1});
          c = h.mul(c, x);
        } else {
          c = h.mul(c, h.inverse(x));
          if (gen_index[c][l.gen] != kNone) w.push_back({gen_index[c][l.gen], -1});
        }
      }
      out.relators.push_back(std::move(w));
    }
  return out;
}

}  // namespace hcc
