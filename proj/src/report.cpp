#include "hcc/report.hpp"

namespace hcc {

namespace {

const BigInt& json_safe_limit() {
  static const BigInt limit = BigInt(1) << 53;
  return limit;
}

Json betti_json(const BettiTriple& b) { return Json::array({b[0], b[1], b[2]}); }

}  // namespace

Json to_json(const BigInt& v) {
  if (abs(v) <= json_safe_limit()) return v.convert_to<long long>();
  return v.str();
}

Json to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    rows.push_back(Json(std::vector<residue_t>(row.begin(), row.end())));
  }
  return rows;
}

Json to_json(const FiltrationProfile& f) {
  Json j;
  j["p"] = f.p;
  j["group"] = f.group.label();
  j["order"] = f.group.size();
  j["delta_dims"] = f.delta_dims;
  j["lambdas"] = f.lambdas;
  j["nilpotent"] = f.nilpotent;
  j["stabilization_k"] = f.stabilization_k ? Json(*f.stabilization_k) : Json(nullptr);
  return j;
}

Json to_json(const ComplexSummary& s) {
  Json j;
  j["p"] = s.p;
  j["boundary_A"] = to_json(s.boundary_A);
  j["b"] = Json::array({s.b0, s.b1, s.b2});
  j["euler"] = s.euler;
  j["rank_A"] = s.rank_A;
  return j;
}

Json to_json(const CoverComplex& c) {
  Json j;
  j["p"] = c.p;
  j["target"] = c.hom.target().label();
  j["order"] = c.hom.target().size();
  j["image_order"] = c.hom.image().size();
  j["b"] = betti_json(c.betti());
  j["hrk"] = c.hrk();
  j["euler"] = c.euler();
  j["components"] = c.components;
  j["rank_d1"] = c.rank_d1;
  j["rank_d2"] = c.rank_d2;
  return j;
}

Json to_json(const HcVerdict& v) {
  Json j;
  j["r"] = v.r;
  j["hrk"] = v.hrk;
  j["lower_bound"] = v.lower;
  j["pass"] = v.passes;
  j["equality"] = v.equality;
  j["connected"] = v.connected;
  j["base_b"] = betti_json(v.base);
  j["cover_b"] = betti_json(v.cover);
  j["case"] = v.equality_case.empty() ? Json(nullptr) : Json(v.equality_case);
  j["falsifying"] = v.falsifying();
  return j;
}

Json to_json(const Manifold3Verdict& v) {
  Json j;
  j["r"] = v.r;
  j["b1_Q"] = v.b1_Q;
  j["bound"] = to_json(v.bound);
  j["needed"] = to_json(v.needed);
  j["certified_by_bound"] = v.certified_by_bound;
  j["requires_external_citation"] = v.requires_citation;
  if (v.equality_profile) {
    j["equality_case"] = v.equality_profile->label;
    j["equality_Q_b"] = v.equality_profile->q;
    j["equality_M_b"] = v.equality_profile->m;
  } else {
    j["equality_case"] = nullptr;
  }
  return j;
}

Json to_json(const GrowthResult& g) {
  Json j;
  Json stages = Json::array();
  for (const auto& s : g.stages) {
    Json e;
    e["stage"] = s.stage;
    e["index"] = to_json(s.index);
    e["generators"] = s.generators;
    e["relators"] = s.relators;
    e["deficiency"] = s.deficiency;
    e["b1"] = s.b1;
    e["required"] = s.required ? to_json(*s.required) : Json(nullptr);
    e["meets_requirement"] = s.meets_requirement;
    stages.push_back(std::move(e));
  }
  j["stages"] = std::move(stages);
  j["truncated"] = g.truncated;
  if (g.truncated) j["truncation_reason"] = g.truncation_reason;
  j["ok"] = g.ok();
  return j;
}

Json to_json(const InequalityRow& row) {
  Json j;
  j["family"] = row.family;
  j["p"] = row.p;
  j["param"] = row.param;
  j["lhs"] = to_json(row.lhs);
  j["rhs"] = to_json(row.rhs);
  j["holds"] = row.holds;
  j["equality"] = row.equality;
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["p"] = r.p;
  j["target"] = r.group_label;
  j["b1_G"] = r.b1_G;
  j["d"] = r.d;
  j["d_kind"] = "witness deficiency";
  Json bounds = Json::array();
  for (std::size_t k = 0; k < r.per_k.size(); ++k) bounds.push_back(Json{{"k", k}, {"value", to_json(r.per_k[k])}});
  j["bounds"] = std::move(bounds);
  j["best"] = Json{{"k", r.best_k}, {"value", to_json(r.best)}};
  j["actual"] = r.actual_b1 ? Json(*r.actual_b1) : Json(nullptr);
  j["tight"] = r.tight ? Json(*r.tight) : Json(nullptr);
  if (!r.actual_b1) j["verdict"] = "unchecked";
  else j["verdict"] = r.sound() ? "sound" : "falsified";
  return j;
}

}  // namespace hcc
