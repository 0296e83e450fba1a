// Test-only reference implementations, deliberately brute force and kept
// independent of the library code paths they are used to check.
#pragma once

#include <optional>
#include <vector>

#include "fhs/equivalence.hpp"
#include "fhs/poly.hpp"
#include "fhs/ring.hpp"
#include "fhs/sequence.hpp"

namespace fhs::testing {

// Irreducibility by trial division against every monic polynomial of
// degree 1 .. deg(f)/2.
inline bool trial_division_irreducible(const Poly& f) {
    const int d = f.degree();
    const int p = f.p();
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long span = 1;
        for (int i = 0; i < dd; ++i) span *= p;
        for (long long t = 0; t < span; ++t) {
            const Poly divisor = add(Poly::from_label(p, t), Poly::xpow(p, dd));
            if (mod(f, divisor).is_zero()) return false;
        }
    }
    return true;
}

// Multiplicative order by repeated multiplication.
inline long long brute_order(const FieldCtx& F, int a) {
    long long ord = 1;
    int cur = a;
    while (cur != 1) {
        cur = F.mul(cur, a);
        ++ord;
    }
    return ord;
}

inline long long brute_order_ext(const ExtFieldCtx& E, const FE& a) {
    long long ord = 1;
    FE cur = a;
    while (!(cur == E.one())) {
        cur = E.mul(cur, a);
        ++ord;
    }
    return ord;
}

// Literal candidate scan over every (shift, scalar) pair, shift-major.
inline std::optional<EquivWitness> brute_equiv_search(const RingCtx& ring, const Sequence& x,
                                                      const Sequence& y) {
    const long long n = static_cast<long long>(x.symbols.size());
    for (long long t = 0; t < n; ++t) {
        for (int lambda = 1; lambda < ring.fq().q(); ++lambda) {
            bool ok = true;
            for (long long i = 0; i < n && ok; ++i)
                ok = x.symbols[static_cast<std::size_t>(i)] ==
                     ring.sym_scale(lambda, y.symbols[static_cast<std::size_t>((i + t) % n)]);
            if (ok) return EquivWitness{lambda, t};
        }
    }
    return std::nullopt;
}

// Positionwise agreement count with explicit modular indexing.
inline long long brute_hamming(const std::vector<long long>& x, const std::vector<long long>& y,
                               long long t) {
    long long c = 0;
    const long long n = static_cast<long long>(x.size());
    for (long long i = 0; i < n; ++i) c += x[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>((i + t) % n)];
    return c;
}

// Wraps bare label vectors as a Sequence for correlation calls.
inline Sequence seq_of_labels(std::vector<long long> labels) {
    Sequence s;
    s.labels = std::move(labels);
    return s;
}

}  // namespace fhs::testing
