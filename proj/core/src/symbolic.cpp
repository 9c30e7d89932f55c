#include "covlab/symbolic.hpp"

#include <algorithm>
#include <cmath>

#include "covlab/errors.hpp"

namespace covlab {

SubshiftSpec SubshiftSpec::sft(std::vector<std::vector<int>> transitions, std::string label) {
  const int k = static_cast<int>(transitions.size());
  if (k < 1) throw ValidationError("transition matrix must be non-empty");
  for (const auto& row : transitions) {
    if (static_cast<int>(row.size()) != k) throw ValidationError("transition matrix must be square");
    for (int v : row)
      if (v != 0 && v != 1) throw ValidationError("transition entries must be 0 or 1");
  }

  // Trim symbols that cannot occur in a bi-infinite path.
  std::vector<bool> alive(k, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      bool out = false, in = false;
      for (int j = 0; j < k; ++j) {
        out = out || (alive[j] && transitions[i][j]);
        in = in || (alive[j] && transitions[j][i]);
      }
      if (!out || !in) {
        alive[i] = false;
        changed = true;
      }
    }
  }
  std::vector<int> keep;
  for (int i = 0; i < k; ++i)
    if (alive[i]) keep.push_back(i);
  if (keep.empty()) throw ValidationError("transition matrix admits no bi-infinite path");

  SubshiftSpec s;
  s.mode_ = Mode::SFT;
  s.label_ = std::move(label);
  s.matrix_.assign(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      s.matrix_[a][b] = transitions[keep[a]][keep[b]];
  return s;
}

SubshiftSpec SubshiftSpec::table(std::vector<BigInt> word_counts, std::string label) {
  if (word_counts.empty()) throw ValidationError("word-count table must be non-empty");
  for (const auto& w : word_counts)
    if (w < 1) throw ValidationError("word counts must be at least 1");
  SubshiftSpec s;
  s.mode_ = Mode::TABLE;
  s.label_ = std::move(label);
  s.counts_ = std::move(word_counts);
  return s;
}

SubshiftSpec SubshiftSpec::sturmian_table(int max_len, std::string label) {
  std::vector<BigInt> w(max_len);
  for (int n = 1; n <= max_len; ++n) w[n - 1] = n + 1;
  return table(std::move(w), std::move(label));
}

int SubshiftSpec::alphabet_size() const {
  if (mode_ == Mode::SFT) return static_cast<int>(matrix_.size());
  return counts_[0].convert_to<int>();
}

BigInt count_words(const SubshiftSpec& s, int n) {
  if (n < 1) throw ValidationError("word length must be positive");
  if (s.mode() == SubshiftSpec::Mode::TABLE) {
    if (n > s.table_length())
      throw GuardError("word-count table too short for length " + std::to_string(n));
    return s.counts_[n - 1];
  }
  const auto& m = s.transitions();
  const int k = static_cast<int>(m.size());
  std::vector<BigInt> v(k, 1);
  for (int step = 1; step < n; ++step) {
    std::vector<BigInt> next(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (m[i][j]) next[i] += v[j];
    v = std::move(next);
  }
  BigInt total = 0;
  for (const auto& x : v) total += x;
  return total;
}

BigInt join_complexity(const SubshiftSpec& s, int radius) {
  if (radius < 0) throw ValidationError("radius must be non-negative");
  return count_words(s, 2 * radius + 1);
}

EntropyReport entropy_estimate(const SubshiftSpec& s, int n_max) {
  if (n_max < 4) throw ValidationError("entropy estimate needs n_max >= 4");
  EntropyReport rep;
  for (int n = 1; n <= n_max; ++n) {
    rep.h.push_back(log2_big(join_complexity(s, n)) / n);
    rep.per_symbol.push_back(log2_big(count_words(s, n)) / n);
  }
  rep.h_at_nmax = rep.h.back();
  rep.tail_estimate =
      log2_big(join_complexity(s, n_max)) - log2_big(join_complexity(s, n_max - 1));
  return rep;
}

double spectral_oracle(const SubshiftSpec& s) {
  if (s.mode() != SubshiftSpec::Mode::SFT)
    throw ValidationError("spectral oracle requires an SFT");
  const auto& m = s.transitions();
  const int k = static_cast<int>(m.size());
  // Power iteration on M + I (primitive for irreducible M); Collatz
  // brackets close on the shifted spectral radius.
  std::vector<double> v(k, 1.0);
  double lo = 0, hi = 0;
  for (int iter = 0; iter < 200000; ++iter) {
    std::vector<double> w(k, 0.0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j)
        if (m[i][j]) w[i] += v[j];
      w[i] += v[i];
    }
    lo = 1e300;
    hi = 0;
    for (int i = 0; i < k; ++i) {
      double ratio = w[i] / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    double norm = *std::max_element(w.begin(), w.end());
    for (auto& x : w) x /= norm;
    v = std::move(w);
    if (hi - lo <= 1e-10 * hi) return std::log2((lo + hi) / 2 - 1.0);
  }
  // Reducible matrices: the max ratio still converges to the shifted
  // spectral radius from the all-ones start.
  return std::log2(hi - 1.0);
}

GeneratorChangeReport generator_change_check(const SubshiftSpec& s, int radius_a, int radius_b,
                                             int n_max) {
  if (radius_a < 1 || radius_b < 1) throw ValidationError("generator radii must be at least 1");
  if (n_max < 1) throw ValidationError("n_max must be positive");
  GeneratorChangeReport rep;
  rep.radius_a = radius_a;
  rep.radius_b = radius_b;
  rep.m = (radius_b + radius_a - 1) / radius_a;
  rep.n = (radius_a + radius_b - 1) / radius_b;
  rep.eta_a = log2_big(count_words(s, 2 * radius_a * n_max + 1)) / n_max;
  rep.eta_b = log2_big(count_words(s, 2 * radius_b * n_max + 1)) / n_max;
  rep.lower_ok = rep.eta_b / rep.m <= rep.eta_a;
  rep.upper_ok = rep.eta_a <= rep.n * rep.eta_b;
  rep.lower_slack = rep.eta_a - rep.eta_b / rep.m;
  rep.upper_slack = rep.n * rep.eta_b - rep.eta_a;
  return rep;
}

Thm93Report thm93_replay(const SubshiftSpec& s, const Rat& eps, int n_max) {
  if (eps <= 0) throw ValidationError("eps must be positive");
  if (n_max < 1) throw ValidationError("n_max must be positive");
  Thm93Report rep;
  for (int r = 0; r <= n_max; ++r) rep.joins.push_back(join_complexity(s, r));
  const BigInt p = numerator(eps), q = denominator(eps);
  for (int r = 0; r + 1 <= n_max; ++r) {
    // joins[r+1] <= (1+eps) joins[r], cross-multiplied.
    if (rep.joins[r + 1] * q <= rep.joins[r] * (q + p)) {
      rep.stable_n = r;
      rep.certified_ratio = Rat(rep.joins[r + 1], rep.joins[r]);
      rep.witness = "cylinders of radius " + std::to_string(r);
      Rat recheck(join_complexity(s, r + 1), join_complexity(s, r));
      COVLAB_CHECK(recheck == rep.certified_ratio, "certified ratio must recompute identically");
      return rep;
    }
  }
  rep.last_ratio = Rat(rep.joins[n_max], rep.joins[n_max - 1]);
  return rep;
}

}  // namespace covlab
