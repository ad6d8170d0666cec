#pragma once

// Fixed (presentation, surjection, p) corpus shared by selfcheck, the
// acceptance suite and the CLI.

#include <optional>
#include <string>
#include <vector>

#include "hcc/homomorphism.hpp"

namespace hcc {

struct NamedPresentation {
  std::string name;
  std::string text;
};

/// F_1, F_2, F_3, Z^2, Klein bottle, genus-2 surface, <a|a^2>, <a|a^3>, <a|a^4>.
const std::vector<NamedPresentation>& standard_presentations();

struct NamedTarget {
  std::string name;
  OrderedGroup group;
  std::uint32_t p;
};

/// (Z_2)^1..4, (Z_3)^1..2, Z_4 (coefficients F_2).
std::vector<NamedTarget> standard_targets();

struct CorpusItem {
  std::string name;  // "<presentation>/<target>#<first|last>"
  Homomorphism hom;
  std::uint32_t p;
};

/// Surjections in lexicographic order of the image tuple. Empty if none.
std::vector<std::vector<element_t>> surjections(const Presentation& pres, const OrderedGroup& target,
                                                std::size_t limit = 0);

/// For every (presentation, target) pair admitting a surjection, the
/// lexicographically first and last surjections.
std::vector<CorpusItem> standard_corpus();

}  // namespace hcc
