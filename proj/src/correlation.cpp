#include "fhs/correlation.hpp"

#include <algorithm>
#include <stdexcept>

namespace fhs {

long long hamming_at(const Sequence& x, const Sequence& y, long long t) {
    const long long n = static_cast<long long>(x.labels.size());
    if (n != static_cast<long long>(y.labels.size()))
        throw std::invalid_argument("hamming_at: sequence length mismatch");
    if (t < 0 || t >= n) throw std::invalid_argument("hamming_at: shift out of range");
    const long long* xs = x.labels.data();
    const long long* ys = y.labels.data();
    long long c = 0;
    // Split at the wrap point so the inner loops stay mod-free.
    for (long long i = 0; i < n - t; ++i) c += (xs[i] == ys[i + t]);
    for (long long i = n - t; i < n; ++i) c += (xs[i] == ys[i + t - n]);
    return c;
}

CorrProfile correlation_profile(const Sequence& x, const Sequence& y, ProfileKind kind) {
    CorrProfile prof;
    prof.kind = kind;
    const long long n = static_cast<long long>(x.labels.size());
    prof.values.reserve(static_cast<std::size_t>(n));
    for (long long t = 0; t < n; ++t) prof.values.push_back(hamming_at(x, y, t));
    return prof;
}

long long auto_max(const Sequence& x) {
    const long long n = static_cast<long long>(x.labels.size());
    if (n < 2) throw std::invalid_argument("auto_max: sequence must have length at least 2");
    long long best = 0;
    for (long long t = 1; t < n; ++t) best = std::max(best, hamming_at(x, x, t));
    return best;
}

long long cross_max(const Sequence& x, const Sequence& y) {
    const long long n = static_cast<long long>(x.labels.size());
    if (n != static_cast<long long>(y.labels.size()))
        throw std::invalid_argument("cross_max: sequence length mismatch");
    long long best = 0;
    for (long long t = 0; t < n; ++t) best = std::max(best, hamming_at(x, y, t));
    return best;
}

long long pair_max(const Sequence& x, const Sequence& y) {
    return std::max({auto_max(x), auto_max(y), cross_max(x, y)});
}

FamilyStats family_stats(const Family& fam) {
    if (fam.members.empty()) throw std::invalid_argument("family_stats: empty family");
    FamilyStats st;
    const long long n = static_cast<long long>(fam.members[0].labels.size());
    if (n >= 2) {
        long long ha = 0;
        for (const auto& seq : fam.members) ha = std::max(ha, auto_max(seq));
        st.H_a = ha;
    }
    if (fam.members.size() >= 2) {
        long long hc = 0;
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            for (std::size_t j = i + 1; j < fam.members.size(); ++j)
                hc = std::max(hc, cross_max(fam.members[i], fam.members[j]));
        st.H_c = hc;
    }
    if (st.H_a && st.H_c) st.M = std::max(*st.H_a, *st.H_c);
    else if (st.H_a) st.M = st.H_a;
    else if (st.H_c) st.M = st.H_c;
    return st;
}

}  // namespace fhs
