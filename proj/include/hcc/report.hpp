#pragma once

// JSON serialisation of results. Integers above 2^53 in magnitude are
// written as decimal strings.

#include <json.hpp>

#include "hcc/bounds.hpp"
#include "hcc/covers.hpp"
#include "hcc/groupring.hpp"
#include "hcc/omega.hpp"
#include "hcc/presentations.hpp"

namespace hcc {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const FpMatrix& m);
Json to_json(const FiltrationProfile& f);
Json to_json(const ComplexSummary& s);
Json to_json(const CoverComplex& c);
Json to_json(const HcVerdict& v);
Json to_json(const Manifold3Verdict& v);
Json to_json(const GrowthResult& g);
Json to_json(const InequalityRow& row);

/// {p, target, b1_G, d, bounds:[{k,value}], best:{k,value}, actual, tight, verdict}
Json to_json(const BoundReport& r);

}  // namespace hcc
