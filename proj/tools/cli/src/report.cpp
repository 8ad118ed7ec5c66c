#include "orbiseif_cli/report.hpp"

#include <sstream>

#include "orbiseif/errors.hpp"

namespace orbiseif::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json invariant_json(const LocalInvariant& li) {
  ordered_json j;
  j["num"] = li.num;
  j["den"] = li.den;
  j["normalizedNum"] = li.normalized_num();
  j["index"] = li.index();
  j["location"] = to_string(li.location);
  return j;
}

ordered_json underlying_json(const Underlying& u) {
  ordered_json j;
  switch (u.kind) {
    case UnderlyingKind::ThreeSphere:
      j["kind"] = "S3";
      break;
    case UnderlyingKind::LensSpace:
      j["kind"] = "lens";
      j["p"] = u.p;
      j["q"] = u.q;
      break;
    case UnderlyingKind::NotComputed:
      j["kind"] = "not-computed";
      j["reason"] = u.reason;
      break;
  }
  return j;
}

Underlying underlying_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "S3") return Underlying::sphere();
  if (kind == "lens") return Underlying::lens(j.at("p"), j.at("q"));
  if (kind == "not-computed") return Underlying::not_computed(j.value("reason", ""));
  throw PreconditionError("unknown underlying kind " + kind);
}

}  // namespace

Report make_report(const EngineReport& e) {
  Report r;
  r.spec = e.spec;
  r.seifert = e.seifert;
  r.normalized = normalize(e.seifert);
  r.topology = e.topology;
  r.provenance = e.provenance;
  return r;
}

ordered_json to_json(const SeifertData& d) {
  ordered_json j;
  ordered_json base;
  base["kind"] = to_string(d.base.kind);
  base["cones"] = d.base.cones;
  base["corners"] = d.base.corners;
  base["xi"] = d.xi ? ordered_json(*d.xi) : ordered_json(nullptr);
  j["base"] = base;
  j["euler"] = {{"num", d.euler.num()}, {"den", d.euler.den()}};
  j["invariants"] = ordered_json::array();
  for (const auto& li : d.invariants) j["invariants"].push_back(invariant_json(li));
  return j;
}

SeifertData seifert_from_json(const json& j) {
  SeifertData d;
  const auto& base = j.at("base");
  auto kind = parse_base_kind(base.at("kind").get<std::string>());
  if (!kind) throw PreconditionError("unknown base kind");
  d.base.kind = *kind;
  d.base.cones = base.at("cones").get<std::vector<std::int64_t>>();
  d.base.corners = base.at("corners").get<std::vector<std::int64_t>>();
  if (!base.at("xi").is_null()) d.xi = base.at("xi").get<int>();
  d.euler = Rational(j.at("euler").at("num").get<std::int64_t>(), j.at("euler").at("den").get<std::int64_t>());
  for (const auto& ij : j.at("invariants")) {
    auto loc = parse_location(ij.at("location").get<std::string>());
    if (!loc) throw PreconditionError("unknown invariant location");
    d.invariants.push_back({ij.at("num").get<std::int64_t>(), ij.at("den").get<std::int64_t>(), *loc});
  }
  return d;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["family"] = to_string(r.spec.family);
  j["params"] = {{"m", r.spec.m}, {"n", r.spec.n}, {"r", r.spec.r}, {"s", r.spec.s}};
  ordered_json s = to_json(r.seifert);
  for (auto it = s.begin(); it != s.end(); ++it) j[it.key()] = it.value();
  j["normalized"] = to_json(r.normalized);
  j["underlying"] = underlying_json(r.topology.underlying);
  j["singularComponents"] = r.topology.singular_components;
  j["provenance"] = r.provenance;
  if (r.verification) {
    j["verification"] = {{"passed", r.verification->passed}, {"diffs", r.verification->diffs}};
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  auto fam = parse_family(j.at("family").get<std::string>());
  if (!fam) throw PreconditionError("unknown family in report");
  const auto& p = j.at("params");
  r.spec = {*fam, p.at("m"), p.at("n"), p.at("r"), p.at("s")};
  r.seifert = seifert_from_json(j);
  r.normalized = seifert_from_json(j.at("normalized"));
  r.topology.underlying = underlying_from_json(j.at("underlying"));
  r.topology.singular_components = j.at("singularComponents").get<std::vector<std::int64_t>>();
  r.provenance = j.at("provenance").get<std::string>();
  if (j.contains("verification")) {
    const auto& v = j.at("verification");
    r.verification = Verification{v.at("passed").get<bool>(), v.at("diffs").get<std::vector<std::string>>()};
  }
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "family      " << to_string(r.spec.family) << "  m=" << r.spec.m << " n=" << r.spec.n << " r=" << r.spec.r
     << " s=" << r.spec.s << "\n";
  os << "base        " << r.seifert.base.str();
  if (r.seifert.xi) os << "  xi=" << *r.seifert.xi;
  os << "\n";
  os << "euler       " << r.seifert.euler.str() << "\n";
  os << "invariants ";
  if (r.seifert.invariants.empty()) os << " none";
  for (const auto& li : r.seifert.invariants) {
    os << " " << li.str();
    if (li.location == Location::CornerReflector) os << "(corner)";
    if (li.index() > 1) os << "[index " << li.index() << "]";
  }
  os << "\n";
  os << "normalized ";
  for (const auto& li : r.normalized.invariants) os << " " << li.str();
  os << "  e=" << r.normalized.euler.str() << "\n";
  os << "underlying  " << r.topology.underlying.str() << "\n";
  os << "singular   ";
  if (r.topology.singular_components.empty()) os << " none";
  for (auto c : r.topology.singular_components) os << " " << c;
  os << "\n";
  os << "provenance  " << r.provenance << "\n";
  if (r.verification) {
    os << "oracle      " << (r.verification->passed ? "agrees" : "DISAGREES") << "\n";
    for (const auto& d : r.verification->diffs) os << "  " << d << "\n";
  }
  return os.str();
}

}  // namespace orbiseif::cli
