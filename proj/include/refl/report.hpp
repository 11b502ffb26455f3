#pragma once

#include <json.hpp>

#include "refl/census.hpp"
#include "refl/marked.hpp"

namespace refl {

/// JSON serializations of the public report types.  All objects carry a
/// "schema_version" field; bump it on any incompatible change.
inline constexpr int kSchemaVersion = 1;

nlohmann::json factorization_json(const GroupContext& ctx,
                                  const Factorization& f);
nlohmann::json orbit_report_json(const GroupContext& ctx,
                                 const OrbitReport& rep);
nlohmann::json census_report_json(const GroupContext& ctx,
                                  const CensusReport& rep);
nlohmann::json ratio_report_json(const GroupContext& ctx,
                                 const RatioReport& rep);
nlohmann::json trace_json(const GroupContext& ctx, const ReduceTrace& trace);

/// CSV of the (signature, orbit size) table, one orbit per line.
std::string census_csv(const CensusReport& rep);

}  // namespace refl
