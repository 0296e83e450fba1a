#pragma once

#include <string>
#include <vector>

#include "fhs/params.hpp"

namespace fhs {

// One hopping sequence: n alphabet symbols plus their integer labels. The
// label vector is what the correlation engine works on.
struct Sequence {
    long long generator_exponent = 0;  // j such that g = alpha^{s j}
    std::vector<RingSymbol> symbols;
    std::vector<long long> labels;
};

struct Family {
    std::vector<Sequence> members;
};

// symbols[i] = trace of gamma * g * beta^i, computed incrementally with one
// multiplication by beta per step. g must be nonzero.
Sequence build_sequence(const FhsParams& params, const FE& g, long long generator_exponent = 0);

// The z sequences with g = alpha^{s j}, j = 0 .. z-1.
Family build_family(const FhsParams& params);

long long count_symbol(const Sequence& seq, const RingSymbol& sym);

// Distinct symbols within one period, ascending by label.
std::vector<RingSymbol> trace_image(const RingCtx& ring, const Sequence& seq);

// Smallest d >= 1 with labels[i + d] = labels[i] cyclically for all i.
long long minimal_period(const Sequence& seq);

// Header row `index,seq0,...` then one row of labels per position.
std::string family_csv(const Family& fam);

}  // namespace fhs
