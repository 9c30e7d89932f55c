// Acceptance harness: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "covlab/instance.hpp"
#include "covlab/metric.hpp"
#include "covlab/suite.hpp"

using namespace covlab;

namespace {

int g_failures = 0;

void report(int number, bool passed, const std::string& name, const std::string& detail) {
  std::printf("criterion %2d: %s  %s%s%s\n", number, passed ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!passed) ++g_failures;
}

struct CliRunner {
  std::string binary;
  std::filesystem::path dir;

  struct Result {
    int exit_code;
    std::string out;
  };

  Result run(const std::string& args) const {
    std::filesystem::path outfile = dir / "out.txt";
    std::string cmd =
        binary + " " + args + " > " + outfile.string() + " 2> " + (dir / "err.txt").string();
    int rc = std::system(cmd.c_str());
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
  }

  std::string write(const std::string& name, const std::string& content) const {
    std::filesystem::path p = dir / name;
    std::ofstream f(p);
    f << content;
    return p.string();
  }

  std::string slurp(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  Limits::set_ground_limit(kMaxGround);

  SuiteOptions opts;  // acceptance-scale case counts are the defaults
  opts.seed = 42;
  auto tmp = std::filesystem::temp_directory_path() / "covlab_acceptance";
  std::filesystem::create_directories(tmp);
  opts.repro_dir = tmp.string();

  std::vector<CriterionResult> results = run_suite(opts);
  std::map<std::string, CriterionResult> by_id;
  for (const auto& r : results) by_id[r.id] = r;

  struct Gate {
    int number;
    std::string id;
    std::string name;
    double budget_seconds;  // 0 = no limit
  };
  const std::vector<Gate> gates = {
      {1, "C01", "Hall/Ore identity on 1000 random graphs", 10},
      {2, "C02", "set-cover oracle agreement on 500 random coverings", 60},
      {3, "C03", "compatible-matching construction on 1000 random instances", 60},
      {4, "C04", "refinement injections perfect on 200 constructive cases", 0},
      {5, "C05", "quantifier reductions match literal definitions (200 seeds)", 300},
      {6, "C06", "main inequalities and the preserved-partition case", 0},
      {7, "C07", "cantor-net covering numbers and slope", 30},
      {8, "C08", "circle-net slope within 0.05 of 1", 0},
      {9, "C09", "subshift entropy estimates and spectral oracle", 0},
  };
  const std::vector<Gate> late_gates = {
      {11, "C11", "ball-covering stability replay on the 256-point circle", 0},
      {12, "C12", "generator-change inequalities on golden-mean tails", 0},
  };
  auto run_gate = [&](const Gate& g) {
    auto it = by_id.find(g.id);
    if (it == by_id.end()) {
      report(g.number, false, g.name, "battery missing");
      return;
    }
    const CriterionResult& r = it->second;
    bool in_budget = g.budget_seconds == 0 || r.seconds <= g.budget_seconds;
    std::string detail = r.passed ? seconds_str(r.seconds) : r.detail;
    if (!in_budget) detail += " exceeds budget " + seconds_str(g.budget_seconds);
    report(g.number, r.passed && in_budget, g.name, detail);
  };
  for (const auto& g : gates) run_gate(g);

  // Criterion 10 includes the CLI exit-code contract for the replays.
  {
    bool lib_ok = by_id.count("C10") && by_id["C10"].passed;
    std::string detail = lib_ok ? "" : by_id["C10"].detail;
    bool cli_ok = true;
    if (argc >= 2) {
      CliRunner cli{argv[1], tmp};
      std::string p3 = cli.write(
          "p3.json",
          R"({"schema_version":1,"kind":"subshift","sft":[[0,1,0],[0,0,1],[1,0,0]]})");
      std::string table = [&] {
        std::string t = R"({"schema_version":1,"kind":"subshift","table":[)";
        for (int n = 1; n <= 25; ++n) t += (n > 1 ? "," : "") + std::to_string(n + 1);
        return t + "]}";
      }();
      std::string st = cli.write("sturmian.json", table);
      std::string full = cli.write(
          "full2.json", R"({"schema_version":1,"kind":"subshift","sft":[[1,1],[1,1]]})");
      auto a = cli.run("replay thm93 --input " + p3 + " --eps 1/5 --nmax 10");
      auto b = cli.run("replay thm93 --input " + st + " --eps 1/5 --nmax 10");
      auto c = cli.run("replay thm93 --input " + full + " --eps 1/5 --nmax 12");
      cli_ok = a.exit_code == 0 && b.exit_code == 0 && c.exit_code == 3 &&
               a.out.find("stable_index,0") != std::string::npos &&
               b.out.find("stable_index,4") != std::string::npos &&
               c.out.find("not found") != std::string::npos;
      if (!cli_ok)
        detail += " cli exits: " + std::to_string(a.exit_code) + "," +
                  std::to_string(b.exit_code) + "," + std::to_string(c.exit_code) +
                  " (want 0,0,3)";
    } else {
      cli_ok = false;
      detail += " covlab binary path not supplied";
    }
    report(10, lib_ok && cli_ok, "vanishing-entropy replay certificates and exit codes", detail);
  }
  for (const auto& g : late_gates) run_gate(g);

  // Criterion 13: byte-identical suite reports across runs and workers.
  {
    bool ok = false;
    std::string detail;
    if (argc >= 2) {
      auto t0 = std::chrono::steady_clock::now();
      CliRunner cli{argv[1], tmp};
      std::string f1 = (tmp / "suite1.csv").string(), f2 = (tmp / "suite2.csv").string(),
                  f3 = (tmp / "suite3.csv").string();
      std::string common = "suite --seed 42 --repro-dir " + tmp.string();
      auto r1 = cli.run(common + " --output " + f1);
      auto r2 = cli.run(common + " --output " + f2);
      auto r3 = cli.run(common + " --workers 8 --output " + f3);
      std::string a = cli.slurp(f1), b = cli.slurp(f2), c = cli.slurp(f3);
      ok = r1.exit_code == 0 && r2.exit_code == 0 && r3.exit_code == 0 && !a.empty() &&
           a == b && a == c;
      double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      detail = ok ? seconds_str(secs) + " for three full runs"
                  : "reports differ or runs failed (" + std::to_string(r1.exit_code) + "," +
                        std::to_string(r2.exit_code) + "," + std::to_string(r3.exit_code) + ")";
    } else {
      detail = "covlab binary path not supplied";
    }
    report(13, ok, "suite reports byte-identical across runs and worker counts", detail);
  }

  std::printf("%s: %d criterion(s) failed\n", g_failures ? "FAIL" : "OK", g_failures);
  return g_failures;
}
