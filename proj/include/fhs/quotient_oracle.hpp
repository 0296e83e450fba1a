#pragma once

#include <string>

namespace fhs {

struct QuotientOracleReport {
    int p = 0, m = 0, k = 0;
    long long elements = 0;
    bool pass = false;
    std::string counterexample;  // empty when pass
};

// Cross-checks the k-coordinate ring representation against the literal
// quotient of GF(p)[xi] by the k-th power of the degree-m irreducible:
// locates the fixed points of the q-power map, builds the coordinate
// isomorphism from them, and compares the full addition and multiplication
// tables through it. `corrupt_mul` deliberately perturbs the structured
// multiplication (negative-control hook for the self test).
QuotientOracleReport quotient_oracle(int p, int m, int k,
                                     long long element_budget = 1LL << 16,
                                     bool corrupt_mul = false);

}  // namespace fhs
