#pragma once

#include "covlab/dynamics.hpp"
#include "covlab/metric.hpp"
#include "covlab/rational.hpp"

namespace covlab::oracle {

// Literal-definition evaluations for cross-checking the production
// reductions. Deliberately written against the raw quantifiers: coverings
// range over every admissible family of nonempty subsets (deduplicated only
// by quantities the definitions themselves depend on), matchings are found
// by exhaustive injection search, and complexities come from the
// dynamic-programming oracle rather than branch and bound. Feasible for
// ground <= 4 and |group| <= 8 for the full subset sweep over E (larger
// groups use E = group, the monotone envelope).
Rat mu_literal(const DynamicalInstance& d);
Rat omega_literal(const DynamicalInstance& d);

// Minimum ball cover by full enumeration of center subsets (<= 12 points).
int gamma_bruteforce(const MetricSpace& m, const Rat& r);

}  // namespace covlab::oracle
