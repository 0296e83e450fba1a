#include "fhs/equivalence.hpp"

#include <numeric>
#include <stdexcept>

namespace fhs {

std::optional<EquivWitness> proj_equiv_search(const RingCtx& ring, const Sequence& x, const Sequence& y) {
    const long long n = static_cast<long long>(x.symbols.size());
    if (n != static_cast<long long>(y.symbols.size()))
        throw std::invalid_argument("proj_equiv_search: sequence length mismatch");
    const FieldCtx& F = ring.fq();
    const int k = ring.k();

    for (long long t = 0; t < n; ++t) {
        int lambda = 0;  // 0 = not yet forced
        bool ok = true;
        for (long long i = 0; i < n && ok; ++i) {
            const RingSymbol& xs = x.symbols[static_cast<std::size_t>(i)];
            const RingSymbol& ys = y.symbols[static_cast<std::size_t>((i + t) % n)];
            for (int c = 0; c < k; ++c) {
                const int yv = ys.comps[static_cast<std::size_t>(c)];
                const int xv = xs.comps[static_cast<std::size_t>(c)];
                if (yv == 0) {
                    if (xv != 0) { ok = false; break; }
                    continue;
                }
                const int cand = F.div(xv, yv);
                if (cand == 0) { ok = false; break; }  // would need lambda = 0
                if (lambda == 0) lambda = cand;
                else if (lambda != cand) { ok = false; break; }
            }
        }
        if (ok) return EquivWitness{lambda == 0 ? 1 : lambda, t};
    }
    return std::nullopt;
}

bool witness_holds(const RingCtx& ring, const Sequence& x, const Sequence& y, const EquivWitness& w) {
    const long long n = static_cast<long long>(x.symbols.size());
    if (n != static_cast<long long>(y.symbols.size())) return false;
    if (w.lambda <= 0 || w.lambda >= ring.fq().q()) return false;
    for (long long i = 0; i < n; ++i) {
        const RingSymbol scaled =
            ring.sym_scale(w.lambda, y.symbols[static_cast<std::size_t>((i + w.shift) % n)]);
        if (!(x.symbols[static_cast<std::size_t>(i)] == scaled)) return false;
    }
    return true;
}

long long coset_count(const FhsParams& P) {
    const long long e = std::gcd(P.n, P.q - 1);
    const long long group = (P.n / e) * (P.q - 1);
    return (P.qr - 1) / group;
}

}  // namespace fhs
