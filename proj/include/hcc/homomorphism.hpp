#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hcc/groupring.hpp"
#include "hcc/presentations.hpp"

namespace hcc {

/// φ: π_1(K_P) -> H given by generator images. Construction checks that
/// every relator maps to the identity.
class Homomorphism {
 public:
  /// Throws IncompatibleHomomorphism naming the first relator with φ(R) ≠ e.
  Homomorphism(Presentation source, OrderedGroup target, std::vector<element_t> images);

  const Presentation& source() const noexcept { return source_; }
  const OrderedGroup& target() const noexcept { return target_; }
  const std::vector<element_t>& images() const noexcept { return images_; }

  element_t evaluate(const FreeWord& w) const;
  /// im(φ), ascending.
  const std::vector<element_t>& image() const noexcept { return image_; }
  bool is_surjective() const noexcept { return image_.size() == target_.size(); }

 private:
  Presentation source_;
  OrderedGroup target_;
  std::vector<element_t> images_;
  std::vector<element_t> image_;
};

/// Generator j maps to the element of make_elementary_abelian(p, r) with
/// coordinates coords[j] (entries reduced mod p).
Homomorphism elementary_abelian_hom(const Presentation& pres, std::uint32_t p, std::size_t r,
                                    const std::vector<std::vector<std::int64_t>>& coords);

/// One line per generator: `name -> (c1,...,cr)` when coordinates are given
/// (elementary abelian target), else `name -> k` with k an element index.
/// Every generator must be mapped exactly once.
Homomorphism parse_homomorphism(std::string_view text, const Presentation& pres, const OrderedGroup& target,
                                const std::vector<std::vector<std::uint32_t>>* coordinates = nullptr);

}  // namespace hcc
