#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fhs/params.hpp"
#include "fhs/sequence.hpp"

namespace fhs {

// Parameter sweep. Unset fields scan their whole admissible range; the
// caps bound the scan when no explicit value is given (every prime up to
// p_cap, every nilpotency index up to k_cap).
struct SearchFilter {
    std::optional<int> p, m, k, r;
    std::optional<long long> z;
    long long budget = kDefaultBudget;
    int p_cap = 13;
    int k_cap = 3;
};

struct SearchRow {
    int p, m, k, r;
    long long z, s;
    int rho;
    long long q, qr;
    long long nu, N, l, lambda;
};

// All admissible (p, m, k, r, z) with one row per rank value, ordered
// lexicographically by (p, m, k, r, z, rho).
std::vector<SearchRow> search_rows(const SearchFilter& filter);

std::string search_csv(const std::vector<SearchRow>& rows);

// Builds the family for every row (gamma = first element of the row's
// rank) and hands it to fn. Contexts are cached across rows.
void for_each_family(const SearchFilter& filter,
                     const std::function<void(const FhsParams&, const Family&)>& fn);

}  // namespace fhs
