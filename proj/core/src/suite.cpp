#include "covlab/suite.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include "covlab/errors.hpp"
#include "covlab/gen.hpp"
#include "covlab/instance.hpp"
#include "covlab/matching.hpp"
#include "covlab/metric.hpp"
#include "covlab/oracle.hpp"
#include "covlab/symbolic.hpp"

namespace covlab {

namespace {

std::uint64_t fnv64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t case_seed(std::uint64_t seed, const std::string& id, int idx) {
  return seed ^ fnv64(id) ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(idx + 1));
}

void write_repro(const SuiteOptions& o, const std::string& id, int idx,
                 const std::string& detail) {
  std::string path = o.repro_dir + "/repro_" + id + ".json";
  std::ofstream f(path);
  if (!f) return;
  f << "{\n  \"criterion\": \"" << id << "\",\n  \"seed\": " << o.seed
    << ",\n  \"case\": " << idx << ",\n  \"detail\": \"" << detail << "\"\n}\n";
}

// Runs `count` independent cases; each derives its RNG from (seed, id, idx)
// alone, so the outcome is identical for any worker count.
template <typename Fn>
CriterionResult run_battery(const SuiteOptions& o, const std::string& id, const std::string& name,
                            int count, Fn&& per_case) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<std::string>> verdicts(count);
  auto work = [&](int idx) {
    gen::Rng rng(case_seed(o.seed, id, idx));
    try {
      verdicts[idx] = per_case(idx, rng);
    } catch (const std::exception& e) {
      verdicts[idx] = std::string("exception: ") + e.what();
    }
  };
  const int workers = std::max(1, std::min(o.workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
      });
    for (auto& t : pool) t.join();
  }
  if (o.inject_fault && *o.inject_fault == id && count > 0 && !verdicts[0])
    verdicts[0] = "injected fault (test fixture)";

  CriterionResult res{id, name, count, true, "", 0.0};
  for (int i = 0; i < count; ++i)
    if (verdicts[i]) {
      res.passed = false;
      write_repro(o, id, i, *verdicts[i]);
      res.detail = "case " + std::to_string(i) + ": " + *verdicts[i] + " (repro: " +
                   o.repro_dir + "/repro_" + id + ".json)";
      break;
    }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

DynamicalInstance make_reduction_instance(gen::Rng& rng) {
  const int n = 2 + rng.below(3);  // 2..4
  UniformStructure s = gen::random_chain(rng, n);
  std::vector<Perm> gens = gen::random_automorphisms(rng, s, 1 + rng.below(2));
  return DynamicalInstance(std::move(s), std::move(gens));
}

std::optional<std::string> check(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

std::string rat_str(const Rat& r) { return format_rat(r); }

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  if (Limits::ground_limit() < kMaxGround) Limits::set_ground_limit(kMaxGround);
  std::vector<CriterionResult> out;

  out.push_back(run_battery(
      opts, "C01", "hall-ore identity", opts.hall_cases,
      [](int, gen::Rng& rng) -> std::optional<std::string> {
        BipartiteGraph b = gen::random_bigraph(rng, 10, 10);
        int nu = matching_number(b);
        int df = deficiency_bound(b);
        if (nu != df)
          return "matching " + std::to_string(nu) + " != deficiency " + std::to_string(df);
        bool hall = df == b.left_size();
        if (has_perfect_matching(b) != hall) return "perfect-matching test disagrees with Hall";
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C02", "set-cover oracle agreement", opts.cover_cases,
      [](int, gen::Rng& rng) -> std::optional<std::string> {
        const int n = 3 + rng.below(6);  // 3..8
        UniformStructure s = gen::random_chain(rng, n);
        Covering u = gen::random_admissible(rng, s);
        int fast = complexity(u, s);
        int slow = complexity_bruteforce(u, s);
        return check(fast == slow, "complexity " + std::to_string(fast) + " != oracle " +
                                       std::to_string(slow));
      }));

  out.push_back(run_battery(
      opts, "C03", "compatible matching construction", opts.compatible_cases,
      [](int, gen::Rng& rng) -> std::optional<std::string> {
        const int n = 2 + rng.below(9);  // 2..10
        GroundSet g(n);
        Covering u = gen::random_covering(rng, g);
        Subset e = gen::random_subset(rng, n, true);
        Subset f = gen::random_subset(rng, n, true);
        int steps = 1 + rng.below(4);
        // The construction self-checks injectivity, star-power membership
        // and the cardinality bound.
        compatible_matching(u, e, f, steps);
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C04", "refinement injection", opts.injection_cases,
      [](int, gen::Rng& rng) -> std::optional<std::string> {
        const int n = 3 + rng.below(6);
        UniformStructure s = gen::random_chain(rng, n);
        Covering u = gen::random_admissible(rng, s);
        ComplexityWitness cw = complexity_with_witness(u, s);
        const Covering& v = cw.witness;
        Covering w = [&] {
          switch (rng.below(3)) {
            case 0: return v;
            case 1: return u.canonicalized();
            default: return join(u, s.finest());
          }
        }();
        PartialMap phi = refinement_injection(u, v, w, s);
        Covering cv = v.canonicalized(), cw2 = w.canonicalized();
        if (phi.size() != cv.size()) return std::string("matching is not perfect");
        for (int i = 0; i < cv.size(); ++i)
          if (!cv.members()[i].intersects(cw2.members()[phi.image(i)]))
            return std::string("matched members do not intersect");
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C05", "exact mu/omega vs literal definition", opts.reduction_cases,
      [](int, gen::Rng& rng) -> std::optional<std::string> {
        DynamicalInstance d = make_reduction_instance(rng);
        Rat mu_fast = *exact_mu(d).mu_value;
        Rat mu_slow = oracle::mu_literal(d);
        if (mu_fast != mu_slow)
          return "mu " + rat_str(mu_fast) + " != literal " + rat_str(mu_slow);
        Rat om_fast = *exact_omega(d).omega_lower;
        Rat om_slow = oracle::omega_literal(d);
        if (om_fast != om_slow)
          return "omega " + rat_str(om_fast) + " != literal " + rat_str(om_slow);
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C06", "main inequalities and partition case", opts.reduction_cases,
      [&opts](int idx, gen::Rng&) -> std::optional<std::string> {
        // Same instance stream as C05.
        gen::Rng rng(case_seed(opts.seed, "C05", idx));
        DynamicalInstance d = make_reduction_instance(rng);
        InequalityReport rep = check_inequalities(d);
        const Rat& omega = *rep.omega.omega_lower;
        const Rat& mu_v = *rep.mu.mu_value;
        if (!(omega >= 1 && omega <= 2)) return "omega outside [1,2]: " + rat_str(omega);
        if (!(omega >= 2 - mu_v))
          return "omega " + rat_str(omega) + " < 2 - mu with mu " + rat_str(mu_v);
        // Group-preserved partition forces omega = 1.
        const Covering& fine = d.structure().finest().canonicalized();
        bool partition = true;
        Subset seen;
        for (const auto& m : fine.members()) {
          if (m.intersects(seen)) partition = false;
          seen |= m;
        }
        bool preserved = true;
        for (const auto& g : d.group())
          if (image_cover(g, fine).members() != fine.members()) preserved = false;
        if (partition && preserved && omega != 1)
          return "group-preserved partition but omega = " + rat_str(omega);
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C07", "cantor net covering numbers and slope", 1,
      [](int, gen::Rng&) -> std::optional<std::string> {
        MetricSpace cantor = MetricSpace::cantor_net(8);
        BigInt pow3(1);
        std::vector<Rat> radii;
        for (int j = 1; j <= 5; ++j) {
          pow3 *= 3;
          radii.emplace_back(1, pow3);
          int got = gamma(cantor, radii.back());
          if (got != (1 << j))
            return "gamma(3^-" + std::to_string(j) + ") = " + std::to_string(got) +
                   ", expected " + std::to_string(1 << j);
        }
        SlopeReport rep = dimension_slope(cantor, RadiusGrid(radii));
        double target = std::log2(2.0) / std::log2(3.0);
        if (std::abs(rep.slope - target) > 1e-3)
          return "slope " + format_double(rep.slope) + " not within 1e-3 of " +
                 format_double(target);
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C08", "circle net dimension slope", 1,
      [](int, gen::Rng&) -> std::optional<std::string> {
        MetricSpace circle = MetricSpace::circle_net(256);
        std::vector<Rat> radii;
        for (int j = 2; j <= 6; ++j) radii.emplace_back(1, BigInt(1) << j);
        SlopeReport rep = dimension_slope(circle, RadiusGrid(radii));
        if (std::abs(rep.slope - 1.0) > 0.05)
          return "slope " + format_double(rep.slope) + " not within 0.05 of 1";
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C09", "subshift entropy estimates", 1,
      [](int, gen::Rng&) -> std::optional<std::string> {
        SubshiftSpec golden = SubshiftSpec::sft({{1, 1}, {1, 0}}, "golden-mean");
        EntropyReport ent = entropy_estimate(golden, 15);
        double target = 2 * std::log2((1 + std::sqrt(5.0)) / 2);
        if (std::abs(ent.tail_estimate - target) > 0.05)
          return "golden-mean estimate " + format_double(ent.tail_estimate) +
                 " not within 0.05 of " + format_double(target);
        double spec = spectral_oracle(golden);
        if (std::abs(spec - std::log2((1 + std::sqrt(5.0)) / 2)) > 1e-6)
          return "spectral oracle " + format_double(spec) + " off by more than 1e-6";
        SubshiftSpec full = SubshiftSpec::sft({{1, 1}, {1, 1}}, "full-2-shift");
        EntropyReport fent = entropy_estimate(full, 16);
        for (int n = 1; n <= 16; ++n)
          if (fent.h[n - 1] != (2.0 * n + 1.0) / n)
            return "full shift h_" + std::to_string(n) + " = " + format_double(fent.h[n - 1]) +
                   " != (2n+1)/n";
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C10", "vanishing-entropy replay certificates", 1,
      [](int, gen::Rng&) -> std::optional<std::string> {
        Rat eps(1, 5);
        SubshiftSpec period3 =
            SubshiftSpec::sft({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, "period-3 orbit");
        Thm93Report a = thm93_replay(period3, eps, 10);
        if (!a.stable_n || *a.stable_n != 0 || a.certified_ratio != 1)
          return std::string("period-3 orbit must certify at index 0 with ratio 1");
        Thm93Report b = thm93_replay(SubshiftSpec::sturmian_table(25), eps, 10);
        if (!b.stable_n || *b.stable_n != 4)
          return "sturmian table must certify at index 4, got " +
                 (b.stable_n ? std::to_string(*b.stable_n) : std::string("none"));
        Thm93Report c = thm93_replay(SubshiftSpec::sft({{1, 1}, {1, 1}}), eps, 20);
        if (c.stable_n) return std::string("full shift must not certify");
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C11", "ball-covering stability replay", 1,
      [](int, gen::Rng&) -> std::optional<std::string> {
        MetricSpace circle = MetricSpace::circle_net(256);
        std::vector<int> rot(256);
        for (int i = 0; i < 256; ++i) rot[i] = (i + 1) % 256;
        std::vector<Perm> gens{Perm(rot)};
        Covering u = ball_cover(circle, Rat(1, 4));
        Thm82Report rep = thm82_replay(circle, gens, u, Rat(1, 2), 12);
        if (rep.l != 0) return "rotation must have Lipschitz level 0";
        if (!rep.success)
          return "replay failed: " + (rep.failure_reason.empty() ? std::string("assertions")
                                                                 : rep.failure_reason);
        if (!rep.cover_refines || !rep.nv_bound || !rep.ratio_bound)
          return std::string("replay assertion flags not all set");
        return std::nullopt;
      }));

  out.push_back(run_battery(
      opts, "C12", "generator-change inequalities", 1,
      [](int, gen::Rng&) -> std::optional<std::string> {
        SubshiftSpec golden = SubshiftSpec::sft({{1, 1}, {1, 0}}, "golden-mean");
        GeneratorChangeReport rep = generator_change_check(golden, 1, 2, 15);
        if (!rep.lower_ok || !rep.upper_ok)
          return "generator-change bounds violated (slacks " + format_double(rep.lower_slack) +
                 ", " + format_double(rep.upper_slack) + ")";
        return std::nullopt;
      }));

  // Informational: how often the excision candidate improves on the finest
  // base as an omega witness.
  {
    auto t0 = std::chrono::steady_clock::now();
    int improved = 0, comparable = 0;
    const int trials = std::min(opts.reduction_cases, 50);
    for (int i = 0; i < trials; ++i) {
      gen::Rng rng(case_seed(opts.seed, "stat-excision", i));
      try {
        DynamicalInstance d = make_reduction_instance(rng);
        const Covering& fine = d.structure().finest();
        Covering base_u = d.structure().bases().size() >= 2
                              ? d.structure().bases()[d.structure().bases().size() - 2]
                              : Covering(d.structure().ground(), {d.structure().ground().all()});
        Covering cf = fine.canonicalized();
        Subset f;
        for (int x = 0; x < d.ground_size(); ++x) {
          bool clash = false;
          for (const auto& m : cf.members())
            if (m.contains(x) && m.intersects(f)) clash = true;
          if (!clash) f.add(x);
        }
        if (f.empty()) continue;
        std::vector<Covering> cands{fine, excised_candidate(d, fine, f, 1)};
        OmegaSearchResult res = omega_upper_search(d, d.group(), base_u, cands);
        ++comparable;
        if (res.ratios[1] <= res.ratios[0]) ++improved;
      } catch (const std::exception&) {
        continue;  // statistic only
      }
    }
    CriterionResult stat{"stat-excision", "excision candidate vs finest base", comparable, true,
                         std::to_string(improved) + "/" + std::to_string(comparable) +
                             " candidates at least as good",
                         0.0};
    stat.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(stat);
  }

  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace covlab
