#pragma once

#include <optional>

#include "fhs/sequence.hpp"

namespace fhs {

// Witness of x[i] == lambda * y[(i + shift) mod n] for all i, with lambda a
// nonzero base-field scalar acting coordinatewise.
struct EquivWitness {
    int lambda = 1;
    long long shift = 0;
    friend bool operator==(const EquivWitness&, const EquivWitness&) = default;
};

// Scans shifts in ascending order; within a shift the scalar is forced, so
// the result is the witness with the smallest (shift, scalar label) over
// the whole (q-1) * n candidate set, or absent when none satisfies it.
std::optional<EquivWitness> proj_equiv_search(const RingCtx& ring, const Sequence& x, const Sequence& y);

bool witness_holds(const RingCtx& ring, const Sequence& x, const Sequence& y, const EquivWitness& w);

// Number of scalar-and-shift orbits among the family generators; the
// admissibility conditions force a single orbit.
long long coset_count(const FhsParams& params);

}  // namespace fhs
