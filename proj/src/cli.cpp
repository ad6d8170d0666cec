#include "hcc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <map>
#include <sstream>

#include "hcc/bounds.hpp"
#include "hcc/covers.hpp"
#include "hcc/report.hpp"
#include "hcc/selfcheck.hpp"

namespace hcc {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kFalsified = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::uint32_t p = 0;
  std::size_t r = 0;
  std::string pres_path;
  std::string hom_path;
  std::string table_path;
  std::size_t cyclic = 0;
  std::size_t elementary = 0;
  std::size_t k_max = 0;
  std::optional<std::uint64_t> order_seed;
  std::string format = "json";
  bool normalize = false;
  std::size_t steps = 2;
  std::optional<std::size_t> b1;
  std::optional<long long> d;
  bool actual = false;
  std::optional<std::size_t> actual_b1;
  bool manifold3 = false;
  bool suite = false;
};

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    out << it.key() << '\t' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
}

/// Deterministic permutation of 0..n-1 (Fisher-Yates on mt19937_64 output).
std::vector<element_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<element_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<element_t>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

struct Target {
  OrderedGroup group;
  std::optional<std::vector<std::vector<std::uint32_t>>> coordinates;
};

std::size_t tuple_width(const std::string& hom_text) {
  std::istringstream in(hom_text);
  std::string line;
  while (std::getline(in, line)) {
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    const auto open = line.find('(', arrow);
    if (open == std::string::npos) return 0;
    return static_cast<std::size_t>(std::count(line.begin() + static_cast<std::ptrdiff_t>(open), line.end(), ',')) + 1;
  }
  return 0;
}

Target resolve_target(const Options& o, const std::string& hom_text = {}) {
  const int given = (o.cyclic ? 1 : 0) + (o.elementary ? 1 : 0) + (!o.table_path.empty() ? 1 : 0);
  if (given > 1) throw InputError("give at most one of --cyclic, --elementary, --group-table");
  Target t;
  if (o.cyclic) {
    t.group = make_cyclic(o.cyclic);
  } else if (!o.table_path.empty()) {
    t.group = parse_group_table(read_file(o.table_path), o.table_path);
  } else {
    std::size_t r = o.elementary ? o.elementary : (o.r ? o.r : tuple_width(hom_text));
    if (r == 0) throw InputError("no target group: use --elementary R, --cyclic N or --group-table FILE");
    if (o.p == 0) throw InputError("--p is required for an elementary abelian target");
    t.group = make_elementary_abelian(o.p, r);
    t.coordinates = elementary_abelian_coordinates(o.p, r);
  }
  if (o.order_seed) {
    const auto perm = seeded_permutation(t.group.size(), *o.order_seed);
    t.group = t.group.reordered(perm);
    if (t.coordinates) {
      std::vector<std::vector<std::uint32_t>> c;
      for (element_t k : perm) c.push_back((*t.coordinates)[k]);
      t.coordinates = std::move(c);
    }
  }
  return t;
}

int cmd_omega(const Options& o, std::ostream& out) {
  const OmegaTable t = omega_by_convolution(o.p, o.r);
  if (o.format == "json") {
    Json j;
    j["p"] = o.p;
    j["r"] = o.r;
    Json rows = Json::array();
    for (std::size_t k = 0; k <= t.degree(); ++k)
      rows.push_back(Json{{"k", k}, {"omega", to_json(t.coeffs[k])}, {"pi", to_json(pi_value(t, k))}});
    j["rows"] = std::move(rows);
    if (o.suite) {
      const InequalityReport ir = check_inequality_suite(o.r, {2, o.p});
      Json s = Json::array();
      for (const auto& row : ir.rows) s.push_back(to_json(row));
      j["inequalities"] = std::move(s);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "p\tr\tk\tomega\tpi\n";
  for (std::size_t k = 0; k <= t.degree(); ++k)
    out << o.p << '\t' << o.r << '\t' << k << '\t' << t.coeffs[k] << '\t' << pi_value(t, k) << '\n';
  if (o.suite) {
    out << "\nfamily\tp\tparam\tlhs\trhs\tholds\tequality\tnote\n";
    for (const auto& row : check_inequality_suite(o.r, {2, o.p}).rows)
      out << row.family << '\t' << row.p << '\t' << row.param << '\t' << row.lhs << '\t' << row.rhs << '\t'
          << row.holds << '\t' << row.equality << '\t' << row.note << '\n';
  }
  return kOk;
}

int cmd_ring(const Options& o, std::ostream& out) {
  if (o.p == 0) throw InputError("--p is required");
  const Target t = resolve_target(o);
  const FiltrationProfile f = filtration_profile(o.p, t.group, o.k_max);
  if (o.format == "json") {
    out << to_json(f).dump(2) << '\n';
    return kOk;
  }
  out << "k\tdelta_dim\tlambda\n";
  for (std::size_t k = 0; k < f.lambdas.size(); ++k) out << k << '\t' << f.delta_dims[k] << '\t' << f.lambdas[k] << '\n';
  return kOk;
}

int cmd_present(const Options& o, std::ostream& out) {
  if (o.p == 0) throw InputError("--p is required");
  const Presentation pres = parse_presentation(read_file(o.pres_path));
  Json j;
  j["presentation"] = format_presentation(pres);
  j["generators"] = pres.n_generators();
  j["relators"] = pres.n_relators();
  j["witness_deficiency"] = pres.deficiency();
  j["summary"] = to_json(complex_summary(pres, o.p));
  if (o.normalize) {
    const NormalizationTrace tr = normalize_with_trace(pres, o.p);
    Json n;
    n["presentation"] = format_presentation(tr.presentation);
    n["summary"] = to_json(complex_summary(tr.presentation, o.p));
    n["diagonal"] = tr.snf.diagonal;
    Json words = Json::array();
    for (const auto& w : tr.generator_words) words.push_back(format_word(w, pres.generator_names));
    n["generators_in_original"] = std::move(words);
    j["normalized"] = std::move(n);
  }
  emit(out, j, o.format);
  return kOk;
}

Homomorphism load_hom(const Options& o, const Presentation& pres, Target& t) {
  const std::string text = read_file(o.hom_path);
  t = resolve_target(o, text);
  return parse_homomorphism(text, pres, t.group, t.coordinates ? &*t.coordinates : nullptr);
}

int cmd_cover(const Options& o, std::ostream& out) {
  if (o.p == 0) throw InputError("--p is required");
  const Presentation pres = parse_presentation(read_file(o.pres_path));
  Target t;
  const Homomorphism hom = load_hom(o, pres, t);
  const CoverComplex c = build_cover(pres, hom, o.p);
  Json j;
  j["presentation"] = format_presentation(pres);
  j["p"] = o.p;
  j["target"] = t.group.label();
  j["surjective"] = hom.is_surjective();
  Json cj = to_json(c);
  for (auto it = cj.begin(); it != cj.end(); ++it)
    if (it.key() != "p" && it.key() != "target") j[it.key()] = it.value();
  Json pattern = Json::array();
  for (const auto& row : check_balance_pattern(c)) pattern.push_back(Json(std::vector<bool>(row.begin(), row.end())));
  j["balanced_blocks"] = std::move(pattern);
  int code = kOk;
  if (t.group.elementary_abelian_rank(o.p)) {
    const HcVerdict v = hc_verdict(c);
    j["verdict"] = to_json(v);
    if (v.falsifying()) code = kFalsified;
  } else {
    j["verdict"] = nullptr;
  }
  emit(out, j, o.format);
  return code;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.manifold3) {
    if (!o.b1 || o.r == 0) throw InputError("--manifold3 needs --b1 and --r");
    emit(out, to_json(verdict_3manifold_z2(*o.b1, o.r)), o.format);
    return kOk;
  }
  if (o.p == 0) throw InputError("--p is required");
  std::size_t b1 = 0;
  long long d = 0;
  std::optional<Homomorphism> hom;
  if (!o.pres_path.empty()) {
    const Presentation pres = parse_presentation(read_file(o.pres_path));
    b1 = complex_summary(pres, o.p).b1;
    d = pres.deficiency();
    if (!o.hom_path.empty()) {
      Target t;
      hom.emplace(load_hom(o, pres, t));
    }
  }
  if (o.b1) b1 = *o.b1;
  if (o.d) d = *o.d;
  if (o.pres_path.empty() && (!o.b1 || !o.d)) throw InputError("give --pres or both --b1 and --d");

  BoundReport rep;
  if (hom) {
    rep = bound_general(b1, d, filtration_profile(o.p, hom->target()));
  } else if (o.r && !o.cyclic && o.table_path.empty()) {
    rep = bound_elementary_abelian(b1, d, o.p, o.r);
  } else {
    rep = bound_general(b1, d, filtration_profile(o.p, resolve_target(o).group));
  }
  if (o.actual) {
    if (!hom) throw InputError("--actual needs --pres and --hom");
    if (!hom->is_surjective()) throw InputError("--actual needs a surjective homomorphism");
    rep.attach_actual(build_cover(*hom, o.p).b1);
  } else if (o.actual_b1) {
    rep.attach_actual(*o.actual_b1);
  }
  Json j = to_json(rep);
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << "k\tvalue\n";
    for (std::size_t k = 0; k < rep.per_k.size(); ++k) out << k << '\t' << rep.per_k[k] << '\n';
    out << "best\t" << rep.best_k << '\t' << rep.best << '\n';
    if (rep.actual_b1) out << "actual\t" << *rep.actual_b1 << '\n';
    out << "verdict\t" << j["verdict"].get<std::string>() << '\n';
  }
  return rep.sound() ? kOk : kFalsified;
}

int cmd_iterate(const Options& o, std::ostream& out) {
  if (o.p == 0) throw InputError("--p is required");
  const GrowthResult g = growth_iterate(parse_presentation(read_file(o.pres_path)), o.p, o.steps);
  if (o.format == "json") {
    out << to_json(g).dump(2) << '\n';
  } else {
    out << "stage\tindex\tgenerators\trelators\tb1\trequired\tok\n";
    for (const auto& s : g.stages)
      out << s.stage << '\t' << s.index << '\t' << s.generators << '\t' << s.relators << '\t' << s.b1 << '\t'
          << (s.required ? s.required->str() : "-") << '\t' << s.meets_requirement << '\n';
    if (g.truncated) out << "# truncated: " << g.truncation_reason << '\n';
  }
  return g.ok() ? kOk : kFalsified;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  const SelfcheckReport rep = run_selfcheck();
  if (o.format == "json") {
    out << to_json(rep).dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) out << (c.ok ? "ok" : "VIOLATED") << '\t' << c.name << '\t' << c.detail << '\n';
    for (const auto& n : rep.notes) out << "note\t" << n << '\n';
    for (const auto& c : rep.checks)
      if (!c.ok) out << "offending\t" << c.name << '\t' << c.offending.dump() << '\n';
  }
  return rep.exit_code();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hcc: mod-p homology of regular covers of presentation complexes"};
  app.require_subcommand(1);
  Options o;

  auto add_p = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--p", o.p, "prime coefficient field F_p");
    if (required) opt->required();
  };
  // One storage slot per subcommand so each keeps its own default.
  std::map<CLI::App*, std::string> formats;
  auto add_format = [&](CLI::App* s, const std::string& def) {
    s->add_option("--format", formats[s], "output format")->check(CLI::IsMember({"json", "tsv"}))->default_val(def);
  };
  auto add_group = [&](CLI::App* s) {
    s->add_option("--cyclic", o.cyclic, "target Z_N");
    s->add_option("--elementary", o.elementary, "target (Z_p)^R");
    s->add_option("--group-table", o.table_path, "target from a multiplication table file");
    s->add_option("--order-seed", o.order_seed, "permute the total order of the target with this seed");
  };

  auto* omega = app.add_subcommand("omega", "|Omega^k_{p,r}| and Pi^k_{p,r} tables");
  add_p(omega, true);
  omega->add_option("--r", o.r, "rank r")->required();
  omega->add_flag("--suite", o.suite, "also run the inequality suite up to r");
  add_format(omega, "tsv");

  auto* ring = app.add_subcommand("ring", "augmentation ideal filtration of F_p[H]");
  add_p(ring, true);
  add_group(ring);
  ring->add_option("--r", o.r, "alias for --elementary");
  ring->add_option("--k-max", o.k_max, "truncate the filtration at k");
  add_format(ring, "json");

  auto* present = app.add_subcommand("present", "presentation complex summary");
  add_p(present, true);
  present->add_option("--pres", o.pres_path, "presentation file")->required();
  present->add_flag("--normalize", o.normalize, "also emit the Smith-normalized presentation");
  add_format(present, "json");

  auto* cover = app.add_subcommand("cover", "Betti numbers of a regular cover");
  add_p(cover, true);
  cover->add_option("--pres", o.pres_path, "presentation file")->required();
  cover->add_option("--hom", o.hom_path, "homomorphism file")->required();
  add_group(cover);
  add_format(cover, "json");

  auto* bounds = app.add_subcommand("bounds", "lower bounds on b1 of a finite-index normal subgroup");
  add_p(bounds, false);
  bounds->add_option("--r", o.r, "rank of the elementary abelian quotient");
  bounds->add_option("--b1", o.b1, "b1(G;F_p)");
  bounds->add_option("--d", o.d, "witness deficiency");
  bounds->add_option("--pres", o.pres_path, "presentation file (supplies b1 and d)");
  bounds->add_option("--hom", o.hom_path, "homomorphism file (supplies the quotient)");
  bounds->add_flag("--actual", o.actual, "build the cover and compare with the bound");
  bounds->add_option("--actual-b1", o.actual_b1, "compare the bound with this b1(N;F_p)");
  bounds->add_flag("--manifold3", o.manifold3, "closed 3-manifold verdict for (Z_2)^r, from --b1 and --r");
  add_group(bounds);
  add_format(bounds, "json");

  auto* iterate = app.add_subcommand("iterate", "iterate the maximal elementary abelian p-quotient kernel");
  add_p(iterate, true);
  iterate->add_option("--pres", o.pres_path, "presentation file")->required();
  iterate->add_option("--steps", o.steps, "number of kernels to take")->default_val(2);
  add_format(iterate, "json");

  auto* selfcheck = app.add_subcommand("selfcheck", "run every invariant and the corpus sweeps");
  add_format(selfcheck, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o1, o2;
    app.exit(e, o1, o2);
    err << o1.str() << o2.str();
    return kInputError;
  }

  for (auto* sub : app.get_subcommands()) o.format = formats[sub];

  try {
    if (*omega) return cmd_omega(o, out);
    if (*ring) {
      if (o.r && !o.elementary) o.elementary = o.r;
      return cmd_ring(o, out);
    }
    if (*present) return cmd_present(o, out);
    if (*cover) return cmd_cover(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*iterate) return cmd_iterate(o, out);
    if (*selfcheck) return cmd_selfcheck(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hcc
