#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covlab/rational.hpp"

namespace covlab {

// Shift system over a finite alphabet, either a subshift of finite type
// (allowed-transition matrix, trimmed to its bi-infinite core) or an
// explicit word-count table (lengths 1..table.size(), trusted as given).
//
// Complexity bridge used throughout: the cylinders over a fixed window of
// length w are disjoint nonempty clopen sets, one per admissible w-word, so
// any covering refining the cylinder partition needs a member per word and
// the partition itself suffices: its uniform complexity equals the number
// of admissible w-words. Joining the shifted 1-cylinder partitions over the
// symmetric generator ball of radius n produces exactly the (2n+1)-window
// partition, which reduces every join complexity below to word counting.
class SubshiftSpec {
 public:
  enum class Mode { SFT, TABLE };

  static SubshiftSpec sft(std::vector<std::vector<int>> transitions, std::string label = "");
  static SubshiftSpec table(std::vector<BigInt> word_counts, std::string label = "");
  // W(n) = n + 1 up to max_len.
  static SubshiftSpec sturmian_table(int max_len, std::string label = "sturmian");

  Mode mode() const { return mode_; }
  const std::string& label() const { return label_; }
  int alphabet_size() const;  // SFT: after trimming; TABLE: W(1)
  const std::vector<std::vector<int>>& transitions() const { return matrix_; }
  int table_length() const { return static_cast<int>(counts_.size()); }

 private:
  SubshiftSpec() = default;
  Mode mode_ = Mode::SFT;
  std::string label_;
  std::vector<std::vector<int>> matrix_;  // trimmed
  std::vector<BigInt> counts_;            // counts_[i] = W(i+1)
  friend BigInt count_words(const SubshiftSpec&, int);
};

// Number of admissible words of length n (SFT: entry sum of M^(n-1)).
BigInt count_words(const SubshiftSpec& s, int n);

// Complexity of the join over the radius-n generator ball: the number of
// admissible (2n+1)-words.
BigInt join_complexity(const SubshiftSpec& s, int radius);

struct EntropyReport {
  std::vector<double> h;           // h[i] = log2 join_complexity(i+1)/(i+1)
  std::vector<double> per_symbol;  // log2 count_words(i+1)/(i+1)
  double h_at_nmax = 0.0;
  // Tail growth increment log2(a(n_max)/a(n_max-1)); converges to the same
  // limit as h and much faster, the headline estimate.
  double tail_estimate = 0.0;
};

// Bidirectional-generator entropy trace up to n_max (>= 4) plus the
// conventional per-symbol trace.
EntropyReport entropy_estimate(const SubshiftSpec& s, int n_max);

// log2 of the spectral radius of the transition matrix, power iteration to
// relative tolerance 1e-9. SFT only.
double spectral_oracle(const SubshiftSpec& s);

struct GeneratorChangeReport {
  int radius_a = 0, radius_b = 0;
  int m = 0, n = 0;  // ball containment exponents
  double eta_a = 0.0, eta_b = 0.0;  // n_max tail estimates
  bool lower_ok = false;  // eta_b / m <= eta_a
  bool upper_ok = false;  // eta_a <= n * eta_b
  double lower_slack = 0.0, upper_slack = 0.0;
};

// Compares the entropy estimates for the generator balls of radii a and b
// against the change-of-generator bounds (1/m) eta_b <= eta_a <= n eta_b
// with m = ceil(b/a), n = ceil(a/b).
GeneratorChangeReport generator_change_check(const SubshiftSpec& s, int radius_a, int radius_b,
                                             int n_max);

struct Thm93Report {
  std::vector<BigInt> joins;  // join_complexity(0..n_max)
  std::optional<int> stable_n;
  Rat certified_ratio;  // joins[n+1]/joins[n] at the stable index
  std::string witness;  // "cylinders of radius n"
  Rat last_ratio;       // evidence when not found
};

// Finds the least radius n with join_complexity(n+1) <= (1+eps)
// join_complexity(n). At such n the (2n+1)-cylinder partition V satisfies
// N(V join gV) <= join_complexity(n+1) for every generator-ball g, so the
// certified ratio bounds max_g N(V join gV)/N(V). No stable index within
// n_max is evidence of positive entropy, reported as inconclusive.
Thm93Report thm93_replay(const SubshiftSpec& s, const Rat& eps, int n_max);

}  // namespace covlab
