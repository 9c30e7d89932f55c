// covlab: exact covering-complexity laboratory CLI.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "covlab/dynamics.hpp"
#include "covlab/errors.hpp"
#include "covlab/instance.hpp"
#include "covlab/matching.hpp"
#include "covlab/metric.hpp"
#include "covlab/oracle.hpp"
#include "covlab/report.hpp"
#include "covlab/suite.hpp"
#include "covlab/symbolic.hpp"

namespace {

using namespace covlab;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitGuard = 2;
constexpr int kExitInconclusive = 3;

void emit(const CsvWriter& csv, const std::string& output) {
  if (output.empty())
    std::cout << csv.str();
  else
    csv.write_file(output);
}

std::string join_elems(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string covering_cell(const Covering& c) {
  std::string out;
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += '|';
    out += join_elems(c.members()[i].elements(), ',');
  }
  return out;
}

int cmd_check(const std::string& input, const std::string& output) {
  CsvWriter csv({"check", "status", "detail"});
  int rc = kExitOk;
  auto step = [&](const std::string& name, auto&& fn) {
    if (rc != kExitOk) return;
    try {
      fn();
      csv.row({name, "ok", ""});
    } catch (const ValidationError& e) {
      csv.row({name, "fail", e.what()});
      rc = kExitFailure;
    }
  };

  InstanceFile f;
  try {
    f = load_instance(input);
    csv.row({"schema", "ok", kind_name(f.kind)});
  } catch (const ValidationError& e) {
    csv.row({"schema", "fail", e.what()});
    emit(csv, output);
    return kExitFailure;
  }

  switch (f.kind) {
    case InstanceKind::CoveringSystem:
    case InstanceKind::Dynamical: {
      UniformStructure* sp = nullptr;
      std::optional<UniformStructure> s;
      step("base-chain", [&] { s.emplace(build_structure(f)); sp = &*s; });
      step("extra-coverings", [&] {
        if (!sp) return;
        for (std::size_t i = 0; i < f.coverings.size(); ++i) {
          InstanceFile probe = f;
          probe.bases = {f.coverings[i]};
          build_structure(probe);
        }
      });
      if (f.kind == InstanceKind::Dynamical)
        step("automorphisms", [&] {
          if (sp) build_dynamical(f);
        });
      break;
    }
    case InstanceKind::Metric: {
      std::optional<MetricSpace> m;
      step("metric-axioms", [&] { m.emplace(build_metric(f)); });
      if (!f.radii.empty())
        step("radius-grid", [&] { build_radii(f); });
      step("lipschitz-generators", [&] {
        if (!m) return;
        for (const auto& g : build_generators(f, m->size())) lipschitz_level(*m, g);
      });
      break;
    }
    case InstanceKind::Subshift:
      step("shift-spec", [&] { build_subshift(f); });
      break;
  }
  emit(csv, output);
  return rc;
}

int cmd_invariants(const std::string& input, const std::string& output, bool want_mu,
                   bool want_omega, bool want_ratio, bool exact) {
  InstanceFile f = load_instance(input);
  DynamicalInstance d = build_dynamical(f);
  if (!want_mu && !want_omega && !want_ratio) want_mu = want_omega = want_ratio = true;

  const bool mu_in_guard = d.ground_size() <= kExactMuMaxGround &&
                           static_cast<int>(d.group().size()) <= kExactMuMaxGroup;
  const bool omega_in_guard = d.ground_size() <= kExactOmegaMaxGround;
  if (exact && ((want_mu && !mu_in_guard) || (want_omega && !omega_in_guard))) {
    std::cerr << "covlab: --exact refused: instance exceeds the exhaustive guards (ground <= "
              << kExactMuMaxGround << " and |group| <= " << kExactMuMaxGroup
              << " for mu, ground <= " << kExactOmegaMaxGround << " for omega)\n";
    return kExitGuard;
  }

  CsvWriter csv({"quantity", "value", "exact", "witness", "notes"});
  std::optional<Rat> mu_val, omega_val;
  if (want_mu) {
    if (mu_in_guard) {
      InvariantReport rep = exact_mu(d);
      mu_val = rep.mu_value;
      csv.row({"mu", format_rat(*rep.mu_value), "true",
               join_elems(rep.witness_f->elements(), ';'), ""});
    } else {
      Rat val = mu_lower_bound(d, d.structure().ground().all(), d.group());
      csv.row({"mu_witness_value", format_rat(val), "false", "F=all",
               "single-F witness term, not a bound on the instance invariant"});
    }
  }
  if (want_omega) {
    if (omega_in_guard) {
      InvariantReport rep = exact_omega(d);
      omega_val = rep.omega_lower;
      csv.row({"omega", format_rat(*rep.omega_lower), "true", covering_cell(*rep.witness_v), ""});
    } else {
      const Covering& fine = d.structure().finest();
      std::vector<Covering> cands{fine};
      OmegaSearchResult res = omega_upper_search(d, d.group(), fine, cands);
      csv.row({"omega_candidate_ratio", format_rat(res.best_ratio), "false",
               covering_cell(res.witness_v),
               "upper bound for the finest-base inner infimum only"});
    }
  }
  if (want_ratio) {
    Rat r = free_product_ratio(d, d.group(), d.structure().finest());
    csv.row({"free_product_ratio", format_rat(r), "true", "E=group, V=finest base", ""});
  }
  if (mu_val && omega_val) {
    std::string verdict = *omega_val == 1 ? "amenability indicator: omega = 1"
                                          : "omega > 1: no amenability verdict at this scale";
    csv.row({"verdict", "", "", "",
             verdict +
                 "; equality omega = 2 - mu holds only for perfect Hausdorff models, finite "
                 "instances certify the inequality only"});
  }
  emit(csv, output);
  return kExitOk;
}

// Operation-level module errors exit 2; invalid input files exit 1.
struct ModuleError {
  std::string what;
};

int cmd_gamma(const std::string& input, const std::string& output) {
  InstanceFile f = load_instance(input);
  MetricSpace m = build_metric(f);
  RadiusGrid grid = build_radii(f);
  CsvWriter csv({"r", "gamma"});
  for (const auto& r : grid.radii()) csv.row({format_rat(r), std::to_string(gamma(m, r))});
  emit(csv, output);
  return kExitOk;
}

int cmd_dimension(const std::string& input, const std::string& output) {
  InstanceFile f = load_instance(input);
  MetricSpace m = build_metric(f);
  RadiusGrid grid = build_radii(f);
  SlopeReport rep = [&] {
    try {
      return dimension_slope(m, grid);
    } catch (const ValidationError& e) {
      throw ModuleError{e.what()};
    }
  }();
  CsvWriter csv({"record", "r", "gamma", "log2_gamma", "neg_log2_r", "value"});
  for (std::size_t i = 0; i < grid.radii().size(); ++i) {
    double x = -std::log2(grid.radii()[i].convert_to<double>());
    csv.row({"point", format_rat(grid.radii()[i]), std::to_string(rep.gammas[i]),
             format_double(std::log2(static_cast<double>(rep.gammas[i]))), format_double(x),
             format_double(rep.point_ratios[i])});
  }
  csv.row({"slope", "", "", "", "", format_double(rep.slope)});
  emit(csv, output);
  return kExitOk;
}

int cmd_entropy(const std::string& input, const std::string& output, int nmax) {
  InstanceFile f = load_instance(input);
  SubshiftSpec s = build_subshift(f);
  EntropyReport rep = [&] {
    try {
      return entropy_estimate(s, nmax);
    } catch (const ValidationError& e) {
      throw ModuleError{e.what()};
    }
  }();
  CsvWriter csv({"record", "n", "join_complexity", "h_bidirectional", "h_per_symbol", "value"});
  for (int n = 1; n <= nmax; ++n)
    csv.row({"point", std::to_string(n), join_complexity(s, n).str(),
             format_double(rep.h[n - 1]), format_double(rep.per_symbol[n - 1]), ""});
  csv.row({"tail_estimate", std::to_string(nmax), "", "", "", format_double(rep.tail_estimate)});
  if (s.mode() == SubshiftSpec::Mode::SFT)
    csv.row({"spectral", "", "", "", "", format_double(spectral_oracle(s))});
  emit(csv, output);
  return kExitOk;
}

int cmd_replay_thm93(const InstanceFile& f, const std::string& output, const Rat& eps, int nmax) {
  SubshiftSpec s = build_subshift(f);
  Thm93Report rep = [&] {
    try {
      return thm93_replay(s, eps, nmax);
    } catch (const ValidationError& e) {
      throw ModuleError{e.what()};
    }
  }();
  CsvWriter csv({"quantity", "value"});
  csv.row({"eps", format_rat(eps)});
  csv.row({"n_max", std::to_string(nmax)});
  for (std::size_t r = 0; r < rep.joins.size(); ++r)
    csv.row({"join_complexity[" + std::to_string(r) + "]", rep.joins[r].str()});
  if (rep.stable_n) {
    csv.row({"stable_index", std::to_string(*rep.stable_n)});
    csv.row({"certified_ratio", format_rat(rep.certified_ratio)});
    csv.row({"witness", rep.witness});
    csv.row({"verdict", "certified"});
    emit(csv, output);
    return kExitOk;
  }
  csv.row({"stable_index", "none"});
  csv.row({"last_ratio", format_rat(rep.last_ratio)});
  csv.row({"verdict", "not found: positive-entropy evidence at this truncation"});
  emit(csv, output);
  return kExitInconclusive;
}

int cmd_replay_thm82(const InstanceFile& f, const std::string& output, const Rat& eps, int nmax) {
  MetricSpace m = build_metric(f);
  std::vector<Perm> gens = build_generators(f, m.size());
  if (gens.empty()) throw ModuleError{"thm82 replay needs generators in the instance"};
  Rat u_radius = f.u_radius ? parse_rat(*f.u_radius) : Rat(1, 4);
  Thm82Report rep = [&] {
    try {
      return thm82_replay(m, gens, ball_cover(m, u_radius), eps, nmax);
    } catch (const ValidationError& e) {
      throw ModuleError{e.what()};
    }
  }();

  CsvWriter csv({"quantity", "value"});
  csv.row({"eps", format_rat(eps)});
  csv.row({"u_radius", format_rat(u_radius)});
  csv.row({"l", std::to_string(rep.l)});
  csv.row({"k", std::to_string(rep.k)});
  for (std::size_t j = 0; j < rep.gamma_trace.size(); ++j)
    csv.row({"gamma[2^-" + std::to_string(j) + "]", std::to_string(rep.gamma_trace[j])});
  if (!rep.success && rep.net.empty()) {
    csv.row({"m", rep.m >= 0 ? std::to_string(rep.m) : "none"});
    csv.row({"verdict", rep.failure_reason});
    emit(csv, output);
    return kExitInconclusive;
  }
  csv.row({"m", std::to_string(rep.m)});
  csv.row({"n", std::to_string(rep.n)});
  csv.row({"net_size", std::to_string(rep.net.size())});
  csv.row({"N_V", std::to_string(rep.n_v)});
  for (std::size_t g = 0; g < rep.ratios.size(); ++g)
    csv.row({"ratio[g" + std::to_string(g) + "]", format_rat(rep.ratios[g])});
  csv.row({"max_ratio", format_rat(rep.max_ratio)});
  csv.row({"u_refined_by_V", rep.cover_refines ? "true" : "false"});
  csv.row({"N_V_at_least_gamma", rep.nv_bound ? "true" : "false"});
  csv.row({"ratio_within_eps", rep.ratio_bound ? "true" : "false"});
  csv.row({"verdict", rep.success ? "certified" : "assertions failed"});
  emit(csv, output);
  return rep.success ? kExitOk : kExitFailure;
}

int cmd_replay_thm65(const InstanceFile& f, const std::string& output) {
  DynamicalInstance d = build_dynamical(f);
  const Covering& fine = d.structure().finest();
  Covering base_u = d.structure().bases().size() >= 2
                        ? d.structure().bases()[d.structure().bases().size() - 2]
                        : Covering(d.structure().ground(), {d.structure().ground().all()});
  Covering cf = fine.canonicalized();
  Subset sep;
  for (int x = 0; x < d.ground_size(); ++x) {
    bool clash = false;
    for (const auto& m : cf.members())
      if (m.contains(x) && m.intersects(sep)) clash = true;
    if (!clash) sep.add(x);
  }
  auto res_and_cands = [&] {
    try {
      std::vector<Covering> cands{fine, excised_candidate(d, fine, sep, 1)};
      OmegaSearchResult res = omega_upper_search(d, d.group(), base_u, cands);
      return std::pair(std::move(res), std::move(cands));
    } catch (const ValidationError& e) {
      throw ModuleError{e.what()};
    }
  }();
  OmegaSearchResult& res = res_and_cands.first;
  std::vector<Covering>& cands = res_and_cands.second;

  CsvWriter csv({"quantity", "value"});
  csv.row({"F", join_elems(sep.elements(), ';')});
  csv.row({"F_size", std::to_string(sep.count())});
  csv.row({"candidate[0]", covering_cell(cands[0])});
  csv.row({"candidate[1]", covering_cell(cands[1])});
  csv.row({"ratio[candidate0]", format_rat(res.ratios[0])});
  csv.row({"ratio[candidate1]", format_rat(res.ratios[1])});
  csv.row({"best_ratio", format_rat(res.best_ratio)});
  csv.row({"witness_V", covering_cell(res.witness_v)});
  emit(csv, output);
  return kExitOk;
}

int cmd_suite(const SuiteOptions& opts, const std::string& output) {
  std::vector<CriterionResult> results = run_suite(opts);
  CsvWriter csv({"criterion", "name", "cases", "status", "detail"});
  for (const auto& r : results)
    csv.row({r.id, r.name, std::to_string(r.cases), r.passed ? "pass" : "fail", r.detail});
  emit(csv, output);
  for (const auto& r : results)
    std::cerr << (r.passed ? "pass " : "FAIL ") << r.id << " " << r.name << " ("
              << format_double(r.seconds) << "s)\n";
  return all_passed(results) ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* guard = std::getenv("COVLAB_GUARD_GROUND")) {
    try {
      covlab::Limits::set_ground_limit(std::stoi(guard));
    } catch (const std::exception& e) {
      std::cerr << "covlab: bad COVLAB_GUARD_GROUND: " << e.what() << "\n";
      return kExitGuard;
    }
  }

  CLI::App app{"covlab: exact covering complexity, matchings and entropy at desk scale"};
  app.require_subcommand(1);
  std::string input, output, eps_text = "1/2", which;
  int nmax = 15;
  bool flag_mu = false, flag_omega = false, flag_ratio = false, flag_exact = false;

  auto add_io = [&](CLI::App* c, bool need_input) {
    if (need_input) c->add_option("--input", input, "instance JSON path")->required();
    c->add_option("--output", output, "report CSV path (default: stdout)");
  };

  CLI::App* c_check = app.add_subcommand("check", "validate an instance file");
  add_io(c_check, true);

  CLI::App* c_inv = app.add_subcommand("invariants", "dynamical invariants mu/omega/ratio");
  add_io(c_inv, true);
  c_inv->add_flag("--mu", flag_mu, "report mu");
  c_inv->add_flag("--omega", flag_omega, "report omega");
  c_inv->add_flag("--ratio", flag_ratio, "report the free-product ratio");
  c_inv->add_flag("--exact", flag_exact, "demand exact values (exit 2 beyond guards)");

  CLI::App* c_gamma = app.add_subcommand("gamma", "ball covering numbers over the radius grid");
  add_io(c_gamma, true);

  CLI::App* c_dim = app.add_subcommand("dimension", "covering-number slope over the radius grid");
  add_io(c_dim, true);

  CLI::App* c_ent = app.add_subcommand("entropy", "shift entropy estimates");
  add_io(c_ent, true);
  c_ent->add_option("--nmax", nmax, "largest window radius (default 15)");

  CLI::App* c_replay = app.add_subcommand("replay", "construction replays");
  c_replay->add_option("which", which, "thm65|thm82|thm93")->required();
  add_io(c_replay, true);
  c_replay->add_option("--eps", eps_text, "tolerance as p/q (default 1/2)");
  c_replay->add_option("--nmax", nmax, "grid depth / largest radius");

  SuiteOptions sopts;
  long long seed_opt = 42;
  int max_cases = 0;
  std::string inject;
  CLI::App* c_suite = app.add_subcommand("suite", "run the full property battery");
  c_suite->add_option("--output", output, "report CSV path (default: stdout)");
  c_suite->add_option("--seed", seed_opt, "battery seed (default 42)");
  c_suite->add_option("--workers", sopts.workers, "parallel workers (default 1)");
  c_suite->add_option("--max-cases", max_cases, "cap each randomized battery at N cases");
  c_suite->add_option("--repro-dir", sopts.repro_dir, "directory for counterexample files");
  c_suite->add_option("--inject-fault", inject, "testing hook: force a failure in a criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitGuard;
  }

  try {
    if (app.got_subcommand(c_check)) return cmd_check(input, output);
    if (app.got_subcommand(c_inv))
      return cmd_invariants(input, output, flag_mu, flag_omega, flag_ratio, flag_exact);
    if (app.got_subcommand(c_gamma)) return cmd_gamma(input, output);
    if (app.got_subcommand(c_dim)) return cmd_dimension(input, output);
    if (app.got_subcommand(c_ent)) return cmd_entropy(input, output, nmax);
    if (app.got_subcommand(c_replay)) {
      covlab::InstanceFile f = covlab::load_instance(input);
      covlab::Rat eps = covlab::parse_rat(eps_text);
      if (which == "thm93") return cmd_replay_thm93(f, output, eps, nmax);
      if (which == "thm82") return cmd_replay_thm82(f, output, eps, nmax == 15 ? 12 : nmax);
      if (which == "thm65") return cmd_replay_thm65(f, output);
      std::cerr << "covlab: unknown replay '" << which << "' (thm65|thm82|thm93)\n";
      return kExitGuard;
    }
    if (app.got_subcommand(c_suite)) {
      sopts.seed = static_cast<std::uint64_t>(seed_opt);
      if (max_cases > 0) {
        sopts.hall_cases = std::min(sopts.hall_cases, max_cases);
        sopts.cover_cases = std::min(sopts.cover_cases, max_cases);
        sopts.compatible_cases = std::min(sopts.compatible_cases, max_cases);
        sopts.injection_cases = std::min(sopts.injection_cases, max_cases);
        sopts.reduction_cases = std::min(sopts.reduction_cases, max_cases);
      }
      if (!inject.empty()) sopts.inject_fault = inject;
      return cmd_suite(sopts, output);
    }
  } catch (const ModuleError& e) {
    std::cerr << "covlab: " << e.what << "\n";
    return kExitGuard;
  } catch (const covlab::GuardError& e) {
    std::cerr << "covlab: guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "covlab: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitGuard;
}
