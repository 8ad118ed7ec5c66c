#include "orbiseif_cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <tuple>
#include <sstream>
#include <thread>

#include "orbiseif/errors.hpp"

namespace orbiseif::cli {

namespace {

using Key = std::tuple<int, std::int64_t, std::int64_t, std::int64_t>;

std::multiset<Key> invariant_multiset(const SeifertData& d) {
  std::multiset<Key> out;
  for (const auto& li : d.invariants) {
    if (li.den == 1) continue;
    out.insert({static_cast<int>(li.location), li.normalized_num(), li.den, li.index()});
  }
  return out;
}

std::string invariants_str(const SeifertData& d) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& li : d.invariants) {
    if (li.den == 1) continue;
    os << (first ? "" : ", ") << li.normalized_num() << "/" << li.den;
    if (li.location == Location::CornerReflector) os << "c";
    first = false;
  }
  os << "}";
  return os.str();
}

bool somma_integral(const SeifertData& d) {
  if (d.base.kind == BaseKind::Disc && !d.xi) return false;
  return somma_residue(d).is_integer();
}

}  // namespace

std::vector<std::string> compare(const EngineReport& engine, const OracleReport& oracle) {
  std::vector<std::string> diffs;
  const SeifertData& e = engine.seifert;
  const SeifertData& o = oracle.seifert;
  if (!(e.base.normalized() == o.base.normalized())) {
    diffs.push_back("base: engine " + e.base.str() + ", oracle " + o.base.str());
  }
  if (!(e.euler == o.euler)) diffs.push_back("euler: engine " + e.euler.str() + ", oracle " + o.euler.str());
  if (invariant_multiset(e) != invariant_multiset(o)) {
    diffs.push_back("invariants: engine " + invariants_str(e) + ", oracle " + invariants_str(o));
  }
  if (e.xi != o.xi) {
    auto show = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("none"); };
    diffs.push_back("xi: engine " + show(e.xi) + ", oracle " + show(o.xi));
  }
  if (!somma_integral(e)) diffs.push_back("somma: engine residue " + somma_residue(e).str() + " is not integral");
  if (!somma_integral(o)) diffs.push_back("somma: oracle residue " + somma_residue(o).str() + " is not integral");

  const Underlying& eu = engine.topology.underlying;
  const Underlying& ou = oracle.topology.underlying;
  if (!underlying_compatible(eu, ou)) {
    diffs.push_back("underlying: engine " + eu.str() + ", oracle " + ou.str());
  }
  if (auto p = fundamental_group_order(eu); p && *p != oracle.pi1.order) {
    diffs.push_back("underlying: engine " + eu.str() + " but the fundamental group has order " +
                    std::to_string(oracle.pi1.order));
  }
  if (eu.kind != UnderlyingKind::NotComputed && !oracle.pi1.cyclic) {
    diffs.push_back("underlying: engine " + eu.str() + " but the fundamental group is not cyclic");
  }
  if (engine.topology.singular_components != oracle.topology.singular_components) {
    auto show = [](const std::vector<std::int64_t>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    diffs.push_back("singular set: engine " + show(engine.topology.singular_components) + ", oracle " +
                    show(oracle.topology.singular_components));
  }
  return diffs;
}

SpecOutcome verify_spec(const FamilySpec& spec, Reading reading) {
  SpecOutcome out;
  out.spec = spec;
  OracleReport oracle;
  try {
    oracle = oracle_report(goursat_group(spec));
  } catch (const Error& ex) {
    out.passed = false;
    out.diffs.push_back(std::string("oracle failed: ") + ex.what());
    return out;
  }
  auto run = [&](Reading rd) -> std::vector<std::string> {
    try {
      return compare(engine_report(spec, rd), oracle);
    } catch (const Error& ex) {
      return {std::string("engine failed: ") + ex.what()};
    }
  };
  out.diffs = run(reading);
  out.passed = out.diffs.empty();
  out.somma_ok = std::none_of(out.diffs.begin(), out.diffs.end(),
                              [](const std::string& d) { return d.rfind("somma", 0) == 0; });
  if (!out.passed && (is_abelian(spec.family) || is_dihedral(spec.family))) {
    for (bool ac : {false, true}) {
      for (bool bs : {false, true}) {
        Reading rd{ac, bs};
        out.readings.emplace_back(rd.str(), run(rd));
      }
    }
  }
  return out;
}

SweepSummary verify_sweep(const std::vector<FamilySpec>& specs, unsigned workers, Reading reading) {
  SweepSummary summary;
  summary.outcomes.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) summary.outcomes[i] = verify_spec(specs[i], reading);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& o : summary.outcomes) {
    summary.failures += o.passed ? 0 : 1;
    summary.somma_failures += o.somma_ok ? 0 : 1;
  }
  return summary;
}

unsigned default_workers() {
  if (const char* env = std::getenv("ORBISEIF_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<FamilyId> parse_family_list(const std::string& s) {
  std::vector<FamilyId> out;
  auto add = [&](FamilyId f) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  };
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (auto f : all_families()) add(f);
    } else if (item == "fibered") {
      for (auto f : all_families())
        if (is_fibered(f)) add(f);
    } else if (item == "table4") {
      for (auto f : all_families())
        if (is_polyhedral_row(f)) add(f);
    } else if (item == "abelian") {
      for (auto f : all_families())
        if (is_abelian(f)) add(f);
    } else if (item == "dihedral") {
      for (auto f : all_families())
        if (is_dihedral(f)) add(f);
    } else if (auto f = parse_family(item)) {
      add(*f);
    } else {
      throw PreconditionError("unknown family '" + item + "'");
    }
  }
  return out;
}

}  // namespace orbiseif::cli
