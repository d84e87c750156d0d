#pragma once

// JSON readers and writers for every structured value the CLI exchanges.
// Readers raise InputError on malformed input; every writer's output is
// accepted by the matching reader.

#include <json.hpp>

#include "hallkit/hallpoly.hpp"
#include "hallkit/segre.hpp"

namespace hallkit {

using Json = nlohmann::json;

Json field_to_json(const FieldCtx& f);
Field field_from_json(const Json& j, const Budget& budget = default_budget());

/// Element as its residue array (length e); readers also take a bare integer
/// for prime fields.
Json fel_to_json(const FieldCtx& f, Fel a);
Fel fel_from_json(const FieldCtx& f, const Json& j);
Json fpoly_to_json(const FieldCtx& f, const FPoly& p);
FPoly fpoly_from_json(const FieldCtx& f, const Json& j);

/// Preset quivers serialize as {"preset": name}.
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json rep_to_json(const Rep& m);
Rep rep_from_json(const Json& j, const Budget& budget = default_budget());

Json table_to_json(const IsoClassTable& t);

/// {"human": "2T^2+2T+1", "coeffs": ["1/1", "2/1", "2/1"]}.
Json ratpoly_to_json(const RatPoly& p);
/// Accepts the object form or the bare coefficient array.
RatPoly ratpoly_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json segre_to_json(const SegreSymbol& s);
SegreSymbol segre_from_json(const Json& j);
Json decomp_to_json(const DecompSymbol& a);
DecompSymbol decomp_from_json(const Json& j);
Json discrete_to_json(const DiscreteClass& c);
DiscreteClass discrete_from_json(const Json& j);

Json report_to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

/// Parses text, turning parse failures into InputError.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace hallkit
