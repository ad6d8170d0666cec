#include "hcc/groupring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hcc/error.hpp"

namespace hcc {

namespace {

std::uint64_t fnv1a(const std::vector<element_t>& table) {
  std::uint64_t h = 1469598103934665603ULL;
  for (element_t v : table) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

void check_group_size(std::size_t n) {
  if (n == 0) throw InputError("group order must be positive");
  if (n > group_cap())
    throw CapError("group of order " + std::to_string(n) + " exceeds the cap of " +
                   std::to_string(group_cap()) + " elements");
}

}  // namespace

std::size_t group_cap() {
  return static_cast<std::size_t>(std::sqrt(static_cast<double>(matrix_cap())));
}

OrderedGroup::OrderedGroup() : OrderedGroup(from_table({{0}}, "1")) {}

OrderedGroup OrderedGroup::from_table(std::vector<std::vector<element_t>> table, std::string label,
                                      std::vector<std::string> element_names) {
  return build(std::move(table), std::move(label), std::move(element_names), true);
}

OrderedGroup OrderedGroup::build(std::vector<std::vector<element_t>> table, std::string label,
                                 std::vector<std::string> element_names, bool check_associativity) {
  const std::size_t n = table.size();
  check_group_size(n);
  auto d = std::make_shared<Data>();
  d->order = n;
  d->label = std::move(label);
  d->table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InputError("multiplication table is not square");
    for (element_t v : table[a]) {
      if (v >= n) throw InputError("multiplication table entry out of range");
      d->table.push_back(v);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return d->table[a * n + b]; };

  // rows and columns are permutations (Latin square)
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[at(a, b)] || col[at(b, a)])
        throw InputError("multiplication table row/column is not a permutation");
      row[at(a, b)] = col[at(b, a)] = true;
    }
  }
  std::optional<element_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = at(a, b) == b && at(b, a) == b;
    if (ok) e = static_cast<element_t>(a);
  }
  if (!e) throw InputError("multiplication table has no identity element");
  d->identity = *e;
  if (check_associativity)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw InputError("multiplication table is not associative");
  d->inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (at(a, b) == *e) d->inverse[a] = static_cast<element_t>(b);

  if (element_names.empty()) {
    for (std::size_t a = 0; a < n; ++a) element_names.push_back(std::to_string(a));
  } else if (element_names.size() != n) {
    throw InputError("element name count does not match group order");
  }
  d->names = std::move(element_names);
  d->hash = fnv1a(d->table);
  return OrderedGroup(std::move(d));
}

std::size_t OrderedGroup::element_order(element_t a) const {
  std::size_t k = 1;
  for (element_t x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool OrderedGroup::is_abelian() const {
  for (element_t a = 0; a < size(); ++a)
    for (element_t b = a + 1; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<std::size_t> OrderedGroup::elementary_abelian_rank(std::uint32_t p) const {
  if (!is_prime(p) || !is_abelian()) return std::nullopt;
  for (element_t a = 0; a < size(); ++a)
    if (a != identity() && element_order(a) != p) return std::nullopt;
  std::size_t r = 0, n = size();
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  if (n != 1) return std::nullopt;
  return r;
}

std::vector<element_t> OrderedGroup::subgroup(std::span<const element_t> gens) const {
  std::vector<bool> seen(size(), false);
  std::vector<element_t> stack{identity()};
  seen[identity()] = true;
  while (!stack.empty()) {
    element_t x = stack.back();
    stack.pop_back();
    for (element_t g : gens) {
      element_t y = mul(x, g);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<element_t> out;
  for (element_t a = 0; a < size(); ++a)
    if (seen[a]) out.push_back(a);
  return out;
}

std::vector<element_t> OrderedGroup::generating_set() const {
  std::vector<element_t> gens;
  std::size_t covered = 1;
  for (element_t a = 0; a < size() && covered < size(); ++a) {
    if (a == identity()) continue;
    gens.push_back(a);
    std::size_t now = subgroup(gens).size();
    if (now == covered)
      gens.pop_back();
    else
      covered = now;
  }
  return gens;
}

OrderedGroup OrderedGroup::reordered(std::span<const element_t> perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw InputError("permutation length does not match group order");
  std::vector<element_t> pos(n, static_cast<element_t>(n));
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n || pos[perm[k]] != n) throw InputError("not a permutation");
    pos[perm[k]] = static_cast<element_t>(k);
  }
  std::vector<std::vector<element_t>> table(n, std::vector<element_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = element_name(perm[a]);
    for (std::size_t b = 0; b < n; ++b) table[a][b] = pos[mul(perm[a], perm[b])];
  }
  return build(std::move(table), label(), std::move(names), false);
}

std::vector<std::vector<std::uint32_t>> elementary_abelian_coordinates(std::uint32_t p, std::size_t r) {
  require_prime(p);
  if (r == 0) throw InputError("elementary abelian rank must be at least 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < r; ++i) {
    n *= p;
    check_group_size(n);
  }
  std::vector<std::vector<std::uint32_t>> coords;
  coords.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint32_t> t(r);
    std::size_t v = x;
    for (std::size_t i = r; i-- > 0;) {
      t[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    coords.push_back(std::move(t));
  }
  std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
    auto sa = std::accumulate(a.begin(), a.end(), 0u);
    auto sb = std::accumulate(b.begin(), b.end(), 0u);
    if (sa != sb) return sa < sb;
    return b < a;  // descending lexicographic within a degree
  });
  return coords;
}

OrderedGroup make_elementary_abelian(std::uint32_t p, std::size_t r) {
  auto coords = elementary_abelian_coordinates(p, r);
  const std::size_t n = coords.size();
  std::map<std::vector<std::uint32_t>, element_t> index;
  for (std::size_t i = 0; i < n; ++i) index[coords[i]] = static_cast<element_t>(i);
  std::vector<std::vector<element_t>> table(n, std::vector<element_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::ostringstream name;
    name << '(';
    for (std::size_t i = 0; i < r; ++i) name << (i ? "," : "") << coords[a][i];
    name << ')';
    names[a] = name.str();
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::uint32_t> s(r);
      for (std::size_t i = 0; i < r; ++i) s[i] = (coords[a][i] + coords[b][i]) % p;
      table[a][b] = index.at(s);
    }
  }
  std::string label = "(Z_" + std::to_string(p) + ")^" + std::to_string(r);
  return OrderedGroup::build(std::move(table), std::move(label), std::move(names), false);
}

OrderedGroup make_cyclic(std::size_t n) {
  check_group_size(n);
  std::vector<std::vector<element_t>> table(n, std::vector<element_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<element_t>((a + b) % n);
  return OrderedGroup::build(std::move(table), "Z_" + std::to_string(n), {}, false);
}

OrderedGroup make_product(const OrderedGroup& a, const OrderedGroup& b) {
  const std::size_t n = a.size() * b.size();
  check_group_size(n);
  std::vector<std::vector<element_t>> table(n, std::vector<element_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto xa = static_cast<element_t>(x / b.size()), xb = static_cast<element_t>(x % b.size());
    names[x] = "(" + a.element_name(xa) + "," + b.element_name(xb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      auto ya = static_cast<element_t>(y / b.size()), yb = static_cast<element_t>(y % b.size());
      table[x][y] = static_cast<element_t>(a.mul(xa, ya) * b.size() + b.mul(xb, yb));
    }
  }
  return OrderedGroup::build(std::move(table), a.label() + "x" + b.label(), std::move(names), false);
}

OrderedGroup parse_group_table(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string word;
  long long n = 0;
  if (!(in >> word) || word != "order" || !(in >> n) || n <= 0)
    throw InputError("group table must start with 'order N'");
  check_group_size(static_cast<std::size_t>(n));
  std::vector<std::vector<element_t>> table(static_cast<std::size_t>(n));
  for (auto& row : table) {
    for (long long j = 0; j < n; ++j) {
      long long v;
      if (!(in >> v)) throw InputError("group table: expected " + std::to_string(n * n) + " entries");
      if (v < 0 || v >= n) throw InputError("group table entry " + std::to_string(v) + " out of range");
      row.push_back(static_cast<element_t>(v));
    }
  }
  if (in >> word) throw InputError("group table: trailing data '" + word + "'");
  auto g = OrderedGroup::from_table(std::move(table), std::move(label));
  if (g.identity() != 0) throw InputError("group table: identity must be index 0");
  return g;
}

GroupRingElement::GroupRingElement(OrderedGroup group, std::uint32_t p)
    : group_(std::move(group)), p_(p), coeffs_(group_.size(), 0) {
  require_prime(p);
}

GroupRingElement::GroupRingElement(OrderedGroup group, std::uint32_t p, std::vector<residue_t> coeffs)
    : group_(std::move(group)), p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() != group_.size())
    throw InputError("group ring element length does not match group order");
  for (auto& c : coeffs_) c %= p;
}

GroupRingElement GroupRingElement::delta(OrderedGroup group, std::uint32_t p, element_t h) {
  GroupRingElement v(std::move(group), p);
  v.coeffs_.at(h) = 1 % p;
  return v;
}

GroupRingElement GroupRingElement::augmentation_generator(OrderedGroup group, std::uint32_t p, element_t h) {
  GroupRingElement v(std::move(group), p);
  PrimeField f(p);
  v.coeffs_[v.group_.identity()] = f.sub(v.coeffs_[v.group_.identity()], 1);
  v.coeffs_.at(h) = f.add(v.coeffs_[h], 1);
  return v;
}

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](residue_t c) { return c == 0; });
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  if (o.p_ != p_ || !(o.group_ == group_)) throw InputError("group ring operands differ in group or modulus");
  PrimeField f(p_);
  GroupRingElement out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = f.add(coeffs_[i], o.coeffs_[i]);
  return out;
}

GroupRingElement GroupRingElement::scaled(residue_t c) const {
  PrimeField f(p_);
  GroupRingElement out = *this;
  for (auto& x : out.coeffs_) x = f.mul(x, c % p_);
  return out;
}

GroupRingElement ring_mul(const GroupRingElement& u, const GroupRingElement& v) {
  if (u.modulus() != v.modulus()) throw InputError("group ring modulus mismatch");
  if (!(u.group() == v.group())) throw InputError("group ring elements over different groups");
  const auto& g = u.group();
  const std::uint64_t p = u.modulus();
  std::vector<std::uint64_t> acc(g.size(), 0);
  auto uc = u.coeffs(), vc = v.coeffs();
  for (element_t a = 0; a < g.size(); ++a) {
    if (uc[a] == 0) continue;
    for (element_t b = 0; b < g.size(); ++b) {
      if (vc[b] == 0) continue;
      auto& slot = acc[g.mul(a, b)];
      slot = (slot + std::uint64_t{uc[a]} * vc[b]) % p;
    }
  }
  std::vector<residue_t> out(acc.begin(), acc.end());
  return GroupRingElement(g, u.modulus(), std::move(out));
}

residue_t augmentation(const GroupRingElement& v) {
  std::uint64_t s = 0;
  for (residue_t c : v.coeffs()) s = (s + c) % v.modulus();
  return static_cast<residue_t>(s);
}

bool is_balanced(const GroupRingElement& v) { return augmentation(v) == 0; }

FpMatrix equivariant_matrix(const GroupRingElement& seed) {
  const auto& g = seed.group();
  FpMatrix m(g.size(), g.size(), seed.modulus());
  for (element_t row = 0; row < g.size(); ++row)
    for (element_t h = 0; h < g.size(); ++h)
      if (seed.coeff(h)) m.set(row, g.mul(row, h), seed.coeff(h));
  return m;
}

namespace {

struct FullFiltration {
  std::vector<EchelonBasis> bases;
  FiltrationProfile profile;
};

FullFiltration compute_filtration(std::uint32_t p, const OrderedGroup& h) {
  const std::size_t n = h.size();
  FullFiltration out;
  EchelonBasis full(n, p);
  for (element_t a = 0; a < n; ++a) full.insert(GroupRingElement::delta(h, p, a).coeffs());
  out.bases.push_back(std::move(full));

  EchelonBasis aug(n, p);
  for (element_t a = 0; a < n; ++a)
    aug.insert(GroupRingElement::augmentation_generator(h, p, a).coeffs());
  out.bases.push_back(std::move(aug));

  const std::vector<element_t> gens = h.generating_set();
  const PrimeField f(p);

  FiltrationProfile& prof = out.profile;
  prof.p = p;
  prof.group = h;
  prof.delta_dims = {n, out.bases[1].size()};

  // Δ^{k+1} = span{ b * (-δ_e + δ_s) : b in basis(Δ^k), s in generating set }
  while (true) {
    const std::size_t k = prof.delta_dims.size() - 1;
    const std::size_t dk = prof.delta_dims[k];
    if (dk == prof.delta_dims[k - 1]) {
      prof.stabilization_k = k - 1;
      break;
    }
    if (dk == 0) {
      prof.stabilization_k = k;
      break;
    }
    EchelonBasis next(n, p);
    std::vector<residue_t> prod(n);
    for (const auto& b : out.bases[k].vectors()) {
      for (element_t s : gens) {
        // b * (-δ_e + δ_s): coefficient b_g moves to gs, minus b itself
        for (element_t g = 0; g < n; ++g) prod[g] = f.neg(b[g]);
        for (element_t g = 0; g < n; ++g) prod[h.mul(g, s)] = f.add(prod[h.mul(g, s)], b[g]);
        next.insert(prod);
        if (next.size() == dk) break;
      }
      if (next.size() == dk) break;
    }
    prof.delta_dims.push_back(next.size());
    out.bases.push_back(std::move(next));
  }
  // Nilpotent: delta_dims ends at 0. Otherwise it ends with the first
  // repeated dimension.
  prof.nilpotent = prof.delta_dims.back() == 0;
  for (std::size_t k = 0; k + 1 < prof.delta_dims.size(); ++k)
    prof.lambdas.push_back(prof.delta_dims[k] - prof.delta_dims[k + 1]);
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<std::uint32_t, std::uint64_t, std::size_t>, FiltrationProfile>& cache() {
  static std::map<std::tuple<std::uint32_t, std::uint64_t, std::size_t>, FiltrationProfile> c;
  return c;
}

FiltrationProfile truncated(FiltrationProfile full, std::size_t k_max) {
  if (k_max == 0 || k_max >= full.lambdas.size()) return full;
  full.lambdas.resize(k_max + 1);
  full.delta_dims.resize(k_max + 2);
  if (full.stabilization_k && *full.stabilization_k > k_max) full.stabilization_k.reset();
  full.nilpotent = full.delta_dims.back() == 0;
  return full;
}

}  // namespace

FiltrationProfile filtration_profile(std::uint32_t p, const OrderedGroup& h, std::size_t k_max) {
  require_prime(p);
  const auto key = std::make_tuple(p, h.table_hash(), h.size());
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end() && it->second.group == h) return truncated(it->second, k_max);
  }
  FiltrationProfile full = compute_filtration(p, h).profile;
  {
    std::lock_guard lock(cache_mutex());
    cache().insert_or_assign(key, full);
  }
  return truncated(std::move(full), k_max);
}

std::vector<EchelonBasis> filtration_bases(std::uint32_t p, const OrderedGroup& h, std::size_t k_max) {
  require_prime(p);
  auto bases = compute_filtration(p, h).bases;
  if (k_max != 0 && bases.size() > k_max + 2) bases.erase(bases.begin() + static_cast<std::ptrdiff_t>(k_max + 2), bases.end());
  return bases;
}

}  // namespace hcc
