#include "hcc/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace hcc {

Homomorphism::Homomorphism(Presentation source, OrderedGroup target, std::vector<element_t> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  source_.validate();
  if (images_.size() != source_.n_generators())
    throw InputError("homomorphism: " + std::to_string(images_.size()) + " images for " +
                     std::to_string(source_.n_generators()) + " generators");
  for (element_t x : images_)
    if (x >= target_.size()) throw InputError("homomorphism: element index " + std::to_string(x) + " out of range");
  for (std::size_t i = 0; i < source_.n_relators(); ++i) {
    const element_t v = evaluate(source_.relators[i]);
    if (v != target_.identity())
      throw IncompatibleHomomorphism("homomorphism: relator " + std::to_string(i + 1) + " (" +
                                         format_word(source_.relators[i], source_.generator_names) +
                                         ") maps to " + target_.element_name(v) + ", not the identity",
                                     i);
  }
  image_ = target_.subgroup(images_);
}

element_t Homomorphism::evaluate(const FreeWord& w) const {
  element_t acc = target_.identity();
  for (const Letter& l : w.letters()) {
    const element_t x = images_.at(l.gen);
    acc = target_.mul(acc, l.exp == 1 ? x : target_.inverse(x));
  }
  return acc;
}

namespace {

element_t coordinates_to_index(const std::vector<std::vector<std::uint32_t>>& coords,
                               const std::vector<std::uint32_t>& c) {
  auto it = std::find(coords.begin(), coords.end(), c);
  if (it == coords.end()) throw InputError("homomorphism: coordinates do not name a target element");
  return static_cast<element_t>(it - coords.begin());
}

}  // namespace

Homomorphism elementary_abelian_hom(const Presentation& pres, std::uint32_t p, std::size_t r,
                                    const std::vector<std::vector<std::int64_t>>& coords) {
  const OrderedGroup h = make_elementary_abelian(p, r);
  const auto table = elementary_abelian_coordinates(p, r);
  const PrimeField f(p);
  std::vector<element_t> images;
  for (const auto& c : coords) {
    if (c.size() != r) throw InputError("homomorphism: expected " + std::to_string(r) + " coordinates per image");
    std::vector<std::uint32_t> red;
    for (auto x : c) red.push_back(f.reduce(x));
    images.push_back(coordinates_to_index(table, red));
  }
  return Homomorphism(pres, h, std::move(images));
}

Homomorphism parse_homomorphism(std::string_view text, const Presentation& pres, const OrderedGroup& target,
                                const std::vector<std::vector<std::uint32_t>>* coordinates) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pres.n_generators(); ++i) index.emplace(pres.generator_names[i], i);
  std::vector<std::optional<element_t>> images(pres.n_generators());

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&] { return "homomorphism line " + std::to_string(lineno) + ": "; };
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw InputError(where() + "expected 'name -> image'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string name = trim(line.substr(0, arrow));
    const std::string rhs = trim(line.substr(arrow + 2));
    auto it = index.find(name);
    if (it == index.end()) throw InputError(where() + "unknown generator '" + name + "'");
    if (images[it->second]) throw InputError(where() + "generator '" + name + "' mapped twice");

    auto parse_uint = [&](const std::string& s) -> std::uint64_t {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
        throw InputError(where() + "expected a non-negative integer, found '" + s + "'");
      return std::stoull(s);
    };
    if (coordinates) {
      if (rhs.size() < 2 || rhs.front() != '(' || rhs.back() != ')')
        throw InputError(where() + "expected a coordinate tuple (c1,...,cr)");
      std::vector<std::uint32_t> c;
      std::istringstream parts(rhs.substr(1, rhs.size() - 2));
      std::string part;
      while (std::getline(parts, part, ',')) c.push_back(static_cast<std::uint32_t>(parse_uint(trim(part))));
      const std::size_t r = coordinates->empty() ? 0 : coordinates->front().size();
      if (c.size() != r)
        throw InputError(where() + "expected " + std::to_string(r) + " coordinates, found " + std::to_string(c.size()));
      images[it->second] = coordinates_to_index(*coordinates, c);
    } else {
      const auto k = parse_uint(rhs);
      if (k >= target.size()) throw InputError(where() + "element index " + rhs + " out of range");
      images[it->second] = static_cast<element_t>(k);
    }
  }
  std::vector<element_t> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw InputError("homomorphism: generator '" + pres.generator_names[i] + "' has no image");
    out.push_back(*images[i]);
  }
  return Homomorphism(pres, target, std::move(out));
}

}  // namespace hcc
