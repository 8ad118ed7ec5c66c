#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "orbiseif/errors.hpp"
#include "orbiseif_cli/report.hpp"
#include "orbiseif_cli/verify.hpp"

namespace {

using namespace orbiseif;

constexpr int kOk = 0;
constexpr int kBadArgs = 1;
constexpr int kMismatch = 2;
constexpr int kUnsupported = 3;

struct ComputeArgs {
  std::string family;
  std::int64_t m = 1, n = 1, r = 1, s = 1;
  bool text = false;
  bool normalized = false;
  bool mirror = false;
  bool check = false;
};

int run_compute(const ComputeArgs& a) {
  auto fam = parse_family(a.family);
  if (!fam) {
    std::cerr << "unknown family '" << a.family << "'\n";
    return kBadArgs;
  }
  const FamilySpec spec{*fam, a.m, a.n, a.r, a.s};
  const Validation v = validate(spec);
  if (!v.ok()) {
    for (const auto& msg : v.violations) std::cerr << "violation: " << msg << "\n";
    return kBadArgs;
  }
  if (!is_fibered(*fam)) {
    std::cerr << "family " << a.family << " preserves no Hopf fibration (order " << table_phi_order(v.canonical)
              << ")\n";
    return kUnsupported;
  }
  cli::Report report = cli::make_report(engine_report(spec));
  if (a.mirror) {
    report.seifert = flip_orientation(report.seifert);
    report.normalized = normalize(report.seifert);
  }
  if (a.normalized) report.seifert = report.normalized;
  int code = kOk;
  if (a.check) {
    cli::SpecOutcome o = cli::verify_spec(spec);
    report.verification = cli::Verification{o.passed, o.diffs};
    if (!o.passed) code = kMismatch;
  }
  if (a.text) {
    std::cout << cli::to_text(report);
  } else {
    std::cout << cli::to_json(report).dump(2) << "\n";
  }
  return code;
}

struct ListArgs {
  std::int64_t max_order = 0;
  std::string families = "all";
  bool text = false;
  unsigned jobs = 0;
};

int run_enumerate(const ListArgs& a) {
  if (a.max_order < 1) {
    std::cerr << "--max-order must be at least 1\n";
    return kBadArgs;
  }
  const auto specs = enumerate_specs(a.max_order, cli::parse_family_list(a.families));
  if (a.text) {
    for (const auto& s : specs) {
      std::cout << s.str() << "  order " << table_phi_order(s) << (is_fibered(s.family) ? "" : "  non-fibered")
                << "\n";
    }
    return kOk;
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : specs) {
    out.push_back({{"family", to_string(s.family)},
                   {"params", {{"m", s.m}, {"n", s.n}, {"r", s.r}, {"s", s.s}}},
                   {"order", table_phi_order(s)},
                   {"fibered", is_fibered(s.family)}});
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_verify(const ListArgs& a) {
  if (a.max_order < 1) {
    std::cerr << "--max-order must be at least 1\n";
    return kBadArgs;
  }
  std::vector<FamilySpec> specs;
  for (const auto& s : enumerate_specs(a.max_order, cli::parse_family_list(a.families))) {
    if (is_fibered(s.family)) specs.push_back(s);
  }
  const unsigned workers = a.jobs > 0 ? a.jobs : cli::default_workers();
  const cli::SweepSummary sum = cli::verify_sweep(specs, workers);
  if (a.text) {
    for (const auto& o : sum.outcomes) {
      if (o.passed) continue;
      std::cout << "MISMATCH " << o.spec.str() << "\n";
      for (const auto& d : o.diffs) std::cout << "  " << d << "\n";
      for (const auto& [name, diffs] : o.readings) {
        std::cout << "  reading " << name << ": " << (diffs.empty() ? "agrees" : std::to_string(diffs.size()) + " diffs")
                  << "\n";
      }
    }
    std::cout << specs.size() << " specs, " << sum.failures << " mismatches, " << sum.somma_failures
              << " somma failures\n";
  } else {
    nlohmann::ordered_json out;
    out["checked"] = specs.size();
    out["mismatches"] = sum.failures;
    out["sommaFailures"] = sum.somma_failures;
    out["failures"] = nlohmann::ordered_json::array();
    for (const auto& o : sum.outcomes) {
      if (o.passed) continue;
      nlohmann::ordered_json f;
      f["spec"] = o.spec.str();
      f["diffs"] = o.diffs;
      nlohmann::ordered_json rd;
      for (const auto& [name, diffs] : o.readings) rd[name] = diffs;
      f["readings"] = rd;
      out["failures"].push_back(f);
    }
    std::cout << out.dump(2) << "\n";
  }
  return sum.failures == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seifert invariants of fibered spherical 3-orbifolds"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "invariants for one group");
  compute->add_option("-f,--family", ca.family, "family id, e.g. 1, 1p, 11p, 9, 26bis")->required();
  compute->add_option("-m", ca.m, "parameter m");
  compute->add_option("-n", ca.n, "parameter n");
  compute->add_option("-r", ca.r, "parameter r");
  compute->add_option("-s", ca.s, "parameter s");
  auto* cj = compute->add_flag("--json", "JSON output (default)");
  compute->add_flag("--text", ca.text, "human-readable output")->excludes(cj);
  compute->add_flag("--normalized", ca.normalized, "report normalized invariants");
  compute->add_flag("--mirror", ca.mirror, "report the orientation-reversed data");
  compute->add_flag("--check", ca.check, "compare against the geometric oracle");

  ListArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "list groups up to an order bound");
  enumerate->add_option("-N,--max-order", ea.max_order, "bound on the order in SO(4)")->required();
  enumerate->add_option("--families", ea.families, "comma separated families or all/fibered/table4");
  auto* ej = enumerate->add_flag("--json", "JSON output (default)");
  enumerate->add_flag("--text", ea.text, "human-readable output")->excludes(ej);

  ListArgs va;
  va.families = "fibered";
  auto* verify = app.add_subcommand("verify", "compare closed forms with the oracle");
  verify->add_option("-N,--max-order", va.max_order, "bound on the order in SO(4)")->required();
  verify->add_option("--families", va.families, "comma separated families or fibered/table4");
  verify->add_option("-j,--jobs", va.jobs, "worker threads (default ORBISEIF_WORKERS or all cores)");
  auto* vj = verify->add_flag("--json", "JSON output (default)");
  verify->add_flag("--text", va.text, "human-readable output")->excludes(vj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (*compute) return run_compute(ca);
    if (*enumerate) return run_enumerate(ea);
    if (*verify) return run_verify(va);
  } catch (const UnsupportedFamily& e) {
    std::cerr << e.what() << "\n";
    return kUnsupported;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return kBadArgs;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  return kBadArgs;
}
