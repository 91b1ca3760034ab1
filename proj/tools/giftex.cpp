// giftex: tables, scenario oracle, recurrence verification and mining.
//
// Exit codes: 0 success, 1 mathematical mismatch, 2 usage error, 3 budget.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "giftex/core_tables.hpp"
#include "giftex/hypergeom.hpp"
#include "giftex/io.hpp"
#include "giftex/miner.hpp"
#include "giftex/recurrence.hpp"
#include "giftex/scenario.hpp"

namespace {

using namespace giftex;

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default verification depth per registry entry.
long default_nmax(const std::string& name) {
  if (name == "G1d") return 300;
  if (name == "E1d" || name == "G2d" || name == "G2e") return 60;
  if (name == "E2d" || name == "G3e") return 40;
  if (name == "E3app") return 25;
  return 30;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// "lo:hi" into two longs.
std::pair<long, long> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("expected LO:HI, got '" + s + "'");
  try {
    return {std::stol(s.substr(0, colon)), std::stol(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected LO:HI, got '" + s + "'");
  }
}

struct TableArgs {
  std::string kind;
  unsigned sigma = 0;
  unsigned nmax = 0;
  std::string format = "csv";
};

int cmd_table(const TableArgs& a) {
  const auto kind = *parse_kind(a.kind);
  TableDump dump = kind == ValueKind::E ? dump_e(build_e_table(StealLimit(a.sigma), a.nmax))
                                        : dump_values(kind, StealLimit(a.sigma), a.nmax);
  std::cout << (a.format == "json" ? to_json(dump) + "\n" : to_csv(dump));
  return kOk;
}

struct VerifyArgs {
  std::string name = "all";
  std::optional<long> nmax;
  unsigned jobs = 1;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  const auto& reg = registry();
  std::vector<std::string> names;
  if (a.name == "all") {
    names = reg.names();
  } else if (reg.contains(a.name)) {
    names = {a.name};
  } else {
    throw UsageError("unknown recurrence '" + a.name + "'");
  }
  bool all_pass = true;
  for (const auto& name : names) {
    const auto rep = verify_named(name, a.nmax.value_or(default_nmax(name)), a.jobs);
    std::cout << (a.format == "json" ? rep.to_json() : rep.to_text()) << '\n';
    all_pass = all_pass && rep.pass;
  }
  return all_pass ? kOk : kMismatch;
}

struct OracleArgs {
  unsigned sigma = 0;
  unsigned gifts = 1;
  bool emit = false;
  std::uint64_t budget = kDefaultScenarioBudget;
};

int cmd_oracle(const OracleArgs& a) {
  if (a.gifts == 0) throw UsageError("--gifts must be at least 1");
  const StealLimit sigma(a.sigma);
  std::uint64_t count = 0, round_trips = 0;
  try {
    for_each_scenario(sigma, a.gifts, a.budget, [&](const ScenarioSequence& s) {
      ++count;
      const auto p = scenario_to_partition(s);
      if (partition_to_scenario(p, sigma) == s) ++round_trips;
      if (a.emit) std::cout << format_scenario(s) << "  k=" << p.ground_size << "  " << format_partition(p) << '\n';
    });
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
  const Integer expected = g(sigma, a.gifts - 1);
  const bool match = expected == count && round_trips == count;
  std::cout << "sigma " << a.sigma << " gifts " << a.gifts << '\n'
            << "count " << count << '\n'
            << "G_" << a.sigma << "(" << a.gifts - 1 << ") " << to_string(expected) << '\n'
            << "round-trips " << round_trips << "/" << count << '\n'
            << (match ? "match" : "MISMATCH") << '\n';
  return match ? kOk : kMismatch;
}

struct MineArgs {
  std::string target;
  unsigned sigma = 0;
  unsigned depth = 1;
  unsigned degree = 0;
  std::string train;
  long holdout = -1;
  bool prune = false;
  bool generalized = false;
  std::size_t max_unknowns = 400;
  std::vector<std::string> compare;
};

int cmd_mine(const MineArgs& a) {
  FitSpec spec;
  spec.target = a.target == "G" ? FitTarget::G : FitTarget::E;
  spec.sigma = StealLimit(a.sigma);
  spec.depth = a.depth;
  spec.degree = a.degree;
  spec.prune = a.prune;
  spec.generalized = a.generalized;
  if (!a.train.empty()) std::tie(spec.train_lo, spec.train_hi) = parse_range(a.train);
  spec.holdout_hi = a.holdout;
  if (spec.generalized && spec.target == FitTarget::E)
    throw UsageError("--generalized applies to G targets only");

  const std::size_t unknowns =
      spec.target == FitTarget::G
          ? (spec.depth + (spec.generalized ? 1 : 0)) * (spec.degree + 1)
          : staircase(spec.depth, spec.prune ? std::optional(spec.sigma) : std::nullopt).size() *
                (spec.degree + 1);
  if (unknowns > a.max_unknowns) {
    std::cerr << "budget exceeded: " << unknowns << " unknowns > --max-unknowns " << a.max_unknowns
              << '\n';
    return kBudget;
  }

  FitInfo info;
  std::string rec_json;
  std::optional<Recurrence1D> r1;
  std::optional<Recurrence2D> r2;
  try {
    if (spec.target == FitTarget::G) {
      auto fit = fit_1d(spec);
      info = fit.info;
      r1 = fit.rec;
      if (r1) rec_json = to_json(*r1);
    } else {
      auto fit = fit_2d(spec);
      info = fit.info;
      r2 = fit.rec;
      if (r2) rec_json = to_json(*r2);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << to_json(info, rec_json) << '\n';

  const auto& reg = registry();
  for (const auto& name : a.compare) {
    bool same = false;
    if (auto it = reg.sequences.find(name); it != reg.sequences.end() && r1) {
      same = same_recurrence(*r1, it->second);
    } else if (auto it2 = reg.tables.find(name); it2 != reg.tables.end() && r2) {
      same = same_recurrence(*r2, it2->second);
    } else if (!reg.contains(name)) {
      throw UsageError("unknown recurrence '" + name + "'");
    }
    std::cout << "compare " << name << ' ' << (same ? "identical" : "different") << '\n';
  }
  return info.status == FitStatus::Found ? kOk : kMismatch;
}

struct DepthArgs {
  std::string target;
  unsigned sigma = 0;
  unsigned max_depth = 8;
};

int cmd_depth(const DepthArgs& a) {
  const auto target = a.target == "G" ? FitTarget::G : FitTarget::E;
  const auto result = minimal_depth(target, StealLimit(a.sigma), a.max_depth);
  for (std::size_t i = 0; i < result.attempts.size(); ++i)
    std::cout << "depth " << i + 1 << ' ' << to_string(result.attempts[i].status) << '\n';
  if (!result.depth) {
    std::cout << "unresolved within depth " << a.max_depth << '\n';
    return kBudget;
  }
  std::cout << "minimal depth " << *result.depth << " (conjectured "
            << conjectured_depth(StealLimit(a.sigma)) << ")\n";
  return kOk;
}

struct CelineArgs {
  long n_lo = 4, n_hi = 15, collapse_nmax = 20;
  bool constants = false;
};

int cmd_celine(const CelineArgs& a) {
  const auto cert = a.constants ? celine_certificate_constants() : celine_certificate();
  const auto rep = celine_check(cert, a.n_lo, a.n_hi, a.collapse_nmax);
  std::cout << rep.annihilation.to_text() << '\n'
            << rep.collapse.to_text() << '\n'
            << "collapse equals shifted E2d: " << (rep.collapse_matches_e2d ? "yes" : "no") << '\n';
  return rep.pass() ? kOk : kMismatch;
}

struct PhiArgs {
  unsigned nmax = 8;
  std::vector<std::string> z{"2/5", "-1", "7/2", "13/9", "101/7"};
  bool as_printed = false;
};

int cmd_phi(const PhiArgs& a) {
  const auto scaling = a.as_printed ? Phi2Scaling::AsPrinted : Phi2Scaling::Corrected;
  std::size_t checked = 0, failed = 0;
  for (const auto& zs : a.z) {
    Rational z;
    try {
      z = parse_rational(zs);
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + zs + "'");
    }
    for (unsigned n = 1; n <= a.nmax; ++n)
      for (unsigned eta = n + 1; eta <= 2 * n; ++eta) {
        ++checked;
        if (!phi_identity_check(n, eta, z, appendix_phi(), scaling)) {
          if (failed++ == 0)
            std::cout << "first failure n=" << n << " eta=" << eta << " z=" << zs << '\n';
        }
      }
  }
  std::cout << "phi identity: " << checked - failed << "/" << checked << " cases hold\n";
  return failed == 0 ? kOk : kMismatch;
}

struct FixtureArgs {
  std::string file;
  std::string snapshot;
  std::string kind = "G";
  unsigned sigma = 1;
};

int cmd_fixtures(const FixtureArgs& a) {
  const auto records = a.file.empty() ? embedded_fixtures() : parse_fixtures(read_file(a.file));
  const auto out = check_fixtures(records);
  for (const auto& d : out.diffs) std::cout << "DIFF " << d << '\n';
  std::cout << "fixtures " << out.checked << " checked, " << out.matched << " matched, "
            << out.errata_confirmed << " errata confirmed, " << out.cross_checks
            << " cross-checks\n";
  bool ok = out.pass();
  if (!a.snapshot.empty()) {
    const auto kind = *parse_kind(a.kind);
    if (kind == ValueKind::E) throw UsageError("--oeis-snapshot supports kinds G and H");
    const auto pairs = parse_bfile(read_file(a.snapshot));
    long max_n = 0;
    for (const auto& [n, v] : pairs) {
      if (n < 0 || (kind == ValueKind::H && n == 0)) throw UsageError("snapshot index out of range");
      max_n = std::max(max_n, n);
    }
    const auto dump = dump_values(kind, StealLimit(a.sigma), static_cast<unsigned>(max_n));
    std::size_t bad = 0;
    for (const auto& [n, v] : pairs) {
      const auto& e = dump.entries[kind == ValueKind::G ? n : n - 1];
      if (e.value != v) {
        if (bad++ < 10) std::cout << "DIFF snapshot index " << n << ": " << to_string(v) << " vs " << to_string(e.value) << '\n';
      }
    }
    std::cout << "snapshot " << pairs.size() << " values, " << pairs.size() - bad << " matched\n";
    ok = ok && bad == 0;
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gift-exchange scenario counts: tables, oracle, recurrences"};
  app.require_subcommand(1);

  TableArgs table;
  auto* t = app.add_subcommand("table", "Emit E, G or H values");
  t->add_option("--kind", table.kind, "E, G or H")->required()->check(CLI::IsMember({"E", "G", "H"}));
  t->add_option("--sigma", table.sigma, "steal limit")->required();
  t->add_option("--nmax", table.nmax, "largest n")->required();
  t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check registry recurrences against computed tables");
  v->add_option("--name", verify.name, "registry name or 'all'");
  v->add_option("--nmax", verify.nmax, "largest n checked");
  v->add_option("--jobs", verify.jobs)->check(CLI::Range(1u, 256u));
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "json"}));

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Enumerate scenarios and compare with G");
  o->add_option("--sigma", oracle.sigma)->required();
  o->add_option("--gifts", oracle.gifts)->required();
  o->add_flag("--emit-sequences", oracle.emit, "print every scenario with its partition");
  o->add_option("--budget", oracle.budget, "maximum number of scenarios");

  MineArgs mine;
  auto* m = app.add_subcommand("mine", "Fit a recurrence by exact linear algebra");
  m->add_option("--target", mine.target)->required()->check(CLI::IsMember({"G", "E"}));
  m->add_option("--sigma", mine.sigma)->required();
  m->add_option("--depth", mine.depth)->required()->check(CLI::Range(1u, 64u));
  m->add_option("--degree", mine.degree)->required()->check(CLI::Range(0u, 16u));
  m->add_option("--train", mine.train, "training n range LO:HI");
  m->add_option("--holdout", mine.holdout, "last n of the holdout block");
  m->add_flag("--prune", mine.prune, "restrict shifts and degrees by the conjectured pattern");
  m->add_flag("--generalized", mine.generalized, "allow a polynomial leading coefficient");
  m->add_option("--max-unknowns", mine.max_unknowns, "budget on the number of unknowns");
  m->add_option("--compare", mine.compare, "registry names to compare against");

  DepthArgs depth;
  auto* d = app.add_subcommand("depth", "Smallest depth with a validated recurrence");
  d->add_option("--target", depth.target)->required()->check(CLI::IsMember({"G", "E"}));
  d->add_option("--sigma", depth.sigma)->required();
  d->add_option("--max-depth", depth.max_depth)->check(CLI::Range(1u, 32u));

  CelineArgs celine;
  auto* c = app.add_subcommand("celine", "Check the E_2 summand certificate");
  c->add_option("--nlo", celine.n_lo);
  c->add_option("--nhi", celine.n_hi);
  c->add_option("--collapse-nmax", celine.collapse_nmax);
  c->add_flag("--constants", celine.constants, "use the 19 constant coefficients");

  PhiArgs phi;
  auto* p = app.add_subcommand("phi", "Check the nine-term 2F1 identity");
  p->add_option("--nmax", phi.nmax);
  p->add_option("--z", phi.z, "rational arguments");
  p->add_flag("--as-printed", phi.as_printed, "omit the 4(eta-n+1) factor on phi_2");

  FixtureArgs fixtures;
  auto* f = app.add_subcommand("fixtures", "Recompute the golden fixture values");
  f->add_option("--file", fixtures.file, "fixture JSON (default: embedded)");
  f->add_option("--oeis-snapshot", fixtures.snapshot, "b-file style 'index value' snapshot");
  f->add_option("--kind", fixtures.kind)->check(CLI::IsMember({"G", "H"}));
  f->add_option("--sigma", fixtures.sigma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*t) return cmd_table(table);
    if (*v) return cmd_verify(verify);
    if (*o) return cmd_oracle(oracle);
    if (*m) return cmd_mine(mine);
    if (*d) return cmd_depth(depth);
    if (*c) return cmd_celine(celine);
    if (*p) return cmd_phi(phi);
    if (*f) return cmd_fixtures(fixtures);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
