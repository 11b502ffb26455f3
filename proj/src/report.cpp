#include "refl/report.hpp"

#include <sstream>

namespace refl {

using nlohmann::json;

json factorization_json(const GroupContext& ctx, const Factorization& f) {
  json j;
  j["target"] = ctx.group().name(f.target);
  json parts = json::array();
  for (int r : f.parts) parts.push_back(ctx.group().name(ctx.refl_elem(r)));
  j["parts"] = std::move(parts);
  return j;
}

json orbit_report_json(const GroupContext& ctx, const OrbitReport& rep) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = ctx.name();
  j["representative"] = factorization_json(ctx, rep.representative);
  j["size"] = rep.size;
  j["truncated"] = rep.truncated;
  j["signature"] = rep.signature.to_string();
  json members = json::array();
  for (const Factorization& f : rep.members)
    members.push_back(factorization_json(ctx, f));
  j["members"] = std::move(members);
  json appearing = json::array();
  for (const auto& pos : rep.appearing) {
    json names = json::array();
    for (int r : pos) names.push_back(ctx.group().name(ctx.refl_elem(r)));
    appearing.push_back(std::move(names));
  }
  j["appearing"] = std::move(appearing);
  return j;
}

json census_report_json(const GroupContext& ctx, const CensusReport& rep) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = rep.group;
  j["coxeter"] = ctx.group().name(rep.coxeter);
  j["length"] = rep.m;
  j["total"] = rep.total;
  json orbits = json::array();
  for (const OrbitSummary& o : rep.orbits) {
    json row;
    row["signature"] = o.signature.to_string();
    row["size"] = o.size;
    row["representative"] = factorization_json(ctx, o.representative);
    row["has_square_pair"] = o.has_square_pair;
    orbits.push_back(std::move(row));
  }
  j["orbits"] = std::move(orbits);
  json realized = json::array();
  for (const Signature& s : rep.realized) realized.push_back(s.to_string());
  j["realized_signatures"] = std::move(realized);
  json valid = json::array();
  for (const Signature& s : rep.valid) valid.push_back(s.to_string());
  j["congruence_signatures"] = std::move(valid);
  j["failures"] = rep.failures;
  j["ok"] = rep.ok();
  j["seconds"] = rep.seconds;
  return j;
}

json ratio_report_json(const GroupContext& ctx, const RatioReport& rep) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = ctx.name();
  j["length"] = rep.m;
  j["total"] = rep.total;
  j["consistent"] = rep.consistent;
  json orbits = json::array();
  for (const OrbitSummary& o : rep.orbits) {
    json row;
    row["signature"] = o.signature.to_string();
    row["size"] = o.size;
    orbits.push_back(std::move(row));
  }
  j["orbits"] = std::move(orbits);
  json lines = json::array();
  for (const RatioLine& l : rep.lines) {
    json row;
    row["signature_1"] = l.sig1.to_string();
    row["signature_2"] = l.sig2.to_string();
    row["size_1"] = l.size1;
    row["size_2"] = l.size2;
    row["literal_match"] = l.literal_match;
    row["transposed_match"] = l.transposed_match;
    row["note"] = l.note;
    lines.push_back(std::move(row));
  }
  j["lines"] = std::move(lines);
  return j;
}

json trace_json(const GroupContext& ctx, const ReduceTrace& trace) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = ctx.name();
  j["input"] = factorization_json(ctx, trace.input);
  j["base"] = factorization_json(ctx, trace.base);
  json steps = json::array();
  for (const ReduceStep& s : trace.steps) {
    json row;
    row["word"] = braid_to_string(s.word);
    row["before"] = factorization_json(ctx, s.before);
    row["position"] = s.position;
    row["class_label"] = "R" + std::to_string(s.class_label + 1);
    row["after"] = factorization_json(ctx, s.after);
    steps.push_back(std::move(row));
  }
  j["steps"] = std::move(steps);
  return j;
}

std::string census_csv(const CensusReport& rep) {
  std::ostringstream os;
  os << "group,length,signature,orbit_size\n";
  for (const OrbitSummary& o : rep.orbits)
    os << rep.group << "," << rep.m << "," << o.signature.to_string() << ","
       << o.size << "\n";
  return os.str();
}

}  // namespace refl
