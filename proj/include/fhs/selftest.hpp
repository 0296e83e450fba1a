#pragma once

#include <array>
#include <string>
#include <vector>

namespace fhs {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Exhaustive fiber counts of the coordinatewise trace for every level
// dividing r: each value must be hit by exactly p^{mk(r-s)} elements.
CheckResult check_trace_fibers(int p, int m, int k, int r);

// Commutativity, associativity, distributivity; exhaustive on small rings,
// sampled (fixed seed) otherwise.
CheckResult check_ring_axioms(int p, int m, int k, int r);

// Sharp single-sequence bound dominates the floor form on a full grid.
CheckResult check_bound_monotone(long long max_nu);

// The pair bound agrees with its closed form on every admissible swept
// parameter set with at least two classes.
CheckResult check_pair_bound_closed_form(long long budget);

// The full battery: representation oracles (built-in set plus extras),
// trace fiber exhaustions, ring axioms, bound cross-checks. `corrupt_mul`
// perturbs the structured multiplication inside the representation oracle.
std::vector<CheckResult> run_selftest(const std::vector<std::array<int, 3>>& extra_oracles,
                                      bool corrupt_mul);

}  // namespace fhs
