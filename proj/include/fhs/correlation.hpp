#pragma once

#include <optional>
#include <vector>

#include "fhs/sequence.hpp"

namespace fhs {

enum class ProfileKind { Auto, Cross };

struct CorrProfile {
    ProfileKind kind = ProfileKind::Auto;
    std::vector<long long> values;  // index t in [0, n)
};

// Number of positions where x agrees with the cyclic t-shift of y.
long long hamming_at(const Sequence& x, const Sequence& y, long long t);

CorrProfile correlation_profile(const Sequence& x, const Sequence& y, ProfileKind kind);

// Peak out-of-phase autocorrelation, t in [1, n); needs n >= 2.
long long auto_max(const Sequence& x);
// Peak crosscorrelation over every shift including t = 0.
long long cross_max(const Sequence& x, const Sequence& y);
long long pair_max(const Sequence& x, const Sequence& y);

struct FamilyStats {
    std::optional<long long> H_a;  // absent when n < 2
    std::optional<long long> H_c;  // absent for singleton families
    std::optional<long long> M;
};

FamilyStats family_stats(const Family& fam);

}  // namespace fhs
