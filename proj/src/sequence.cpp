#include "fhs/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace fhs {

Sequence build_sequence(const FhsParams& P, const FE& g, long long generator_exponent) {
    const RingCtx& ring = *P.ring;
    if (ring.fqr().is_zero(g)) throw std::invalid_argument("build_sequence: g must be nonzero");

    Sequence seq;
    seq.generator_exponent = generator_exponent;
    seq.symbols.reserve(static_cast<std::size_t>(P.n));
    seq.labels.reserve(static_cast<std::size_t>(P.n));

    GrElement cur = ring.scale(P.gamma, g);
    for (long long i = 0; i < P.n; ++i) {
        RingSymbol sym = ring.trace_to_base(cur);
        seq.labels.push_back(ring.sym_label(sym));
        seq.symbols.push_back(std::move(sym));
        if (i + 1 < P.n) cur = ring.scale(cur, P.beta);
    }
    return seq;
}

Family build_family(const FhsParams& P) {
    Family fam;
    fam.members.reserve(static_cast<std::size_t>(P.z));
    const long long ord = P.qr - 1;
    for (long long j = 0; j < P.z; ++j) {
        FE g = P.tower->fqr.pow(P.alpha, (P.s % ord) * j % ord);
        fam.members.push_back(build_sequence(P, g, j));
    }
    return fam;
}

long long count_symbol(const Sequence& seq, const RingSymbol& sym) {
    long long c = 0;
    for (const auto& s : seq.symbols)
        if (s == sym) ++c;
    return c;
}

std::vector<RingSymbol> trace_image(const RingCtx& ring, const Sequence& seq) {
    std::vector<long long> labels(seq.labels);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<RingSymbol> out;
    out.reserve(labels.size());
    for (long long t : labels) out.push_back(ring.sym_from_label(t));
    return out;
}

long long minimal_period(const Sequence& seq) {
    const long long n = static_cast<long long>(seq.labels.size());
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (long long i = 0; i < n && periodic; ++i)
            periodic = seq.labels[static_cast<std::size_t>(i)] ==
                       seq.labels[static_cast<std::size_t>((i + d) % n)];
        if (periodic) return d;
    }
    return n;
}

std::string family_csv(const Family& fam) {
    std::string out = "index";
    for (std::size_t j = 0; j < fam.members.size(); ++j) out += ",seq" + std::to_string(j);
    out += '\n';
    const std::size_t n = fam.members.empty() ? 0 : fam.members[0].labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += std::to_string(i);
        for (const auto& seq : fam.members) out += ',' + std::to_string(seq.labels[i]);
        out += '\n';
    }
    return out;
}

}  // namespace fhs
