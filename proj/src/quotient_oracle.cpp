#include "fhs/quotient_oracle.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

#include "fhs/numutil.hpp"
#include "fhs/poly.hpp"
#include "fhs/ring.hpp"

namespace fhs {

namespace {

std::string triple(long long x, long long y, const std::string& what, long long lhs, long long rhs) {
    return what + " mismatch at x=" + std::to_string(x) + " y=" + std::to_string(y) +
           ": structured image " + std::to_string(lhs) + " vs literal " + std::to_string(rhs);
}

}  // namespace

QuotientOracleReport quotient_oracle(int p, int m, int k, long long element_budget, bool corrupt_mul) {
    if (!is_prime(p)) throw std::invalid_argument("quotient_oracle: p must be prime");
    if (m < 1 || k < 1) throw std::invalid_argument("quotient_oracle: m and k must be positive");
    const long long count = ipow_capped(p, m * k, element_budget);
    if (count > element_budget) throw std::invalid_argument("quotient_oracle: element budget exceeded");

    QuotientOracleReport rep;
    rep.p = p;
    rep.m = m;
    rep.k = k;
    rep.elements = count;

    // Literal side: residues mod omega^k as polynomials of degree < mk,
    // identified by their labels. Nothing here touches the structured code.
    const Poly omega = find_irreducible(p, m);
    Poly omega_k = Poly::one(p);
    for (int i = 0; i < k; ++i) omega_k = mul(omega_k, omega);

    auto lit_add = [&](long long a, long long b) {
        return add(Poly::from_label(p, a), Poly::from_label(p, b)).label();
    };
    auto lit_mul = [&](long long a, long long b) {
        return mod(mul(Poly::from_label(p, a), Poly::from_label(p, b)), omega_k).label();
    };
    auto lit_pow = [&](long long a, long long e) {
        return powmod(Poly::from_label(p, a), e, omega_k).label();
    };

    // Structured side (the code under test): k coordinates over GF(q).
    auto tower = std::make_shared<Tower>(p, m, 1);
    const RingCtx ring(tower, k);
    const long long q = tower->fq.q();

    auto structured_mul = [&](const GrElement& x, const GrElement& y) {
        GrElement z = ring.mul(x, y);
        if (corrupt_mul && !ring.is_zero(x) && !ring.is_zero(y)) {
            auto& top = z.comps[static_cast<std::size_t>(k - 1)];
            top = tower->fqr.add(top, tower->fqr.one());
        }
        return z;
    };

    // Fixed points of the q-power map form the coefficient subfield.
    std::vector<long long> fixed;
    for (long long x = 0; x < count; ++x)
        if (lit_pow(x, q) == x) fixed.push_back(x);
    if (static_cast<long long>(fixed.size()) != q) {
        rep.counterexample = "fixed-point set of the q-power map has " +
                             std::to_string(fixed.size()) + " elements, expected " + std::to_string(q);
        return rep;
    }

    // tau: GF(q) label -> literal representative, keyed by reduction mod omega.
    std::vector<long long> tau(static_cast<std::size_t>(q), -1);
    for (long long x : fixed) {
        long long key = mod(Poly::from_label(p, x), omega).label();
        if (tau[static_cast<std::size_t>(key)] != -1) {
            rep.counterexample = "reduction mod omega is not injective on the fixed-point set";
            return rep;
        }
        tau[static_cast<std::size_t>(key)] = x;
    }

    // Powers of omega inside the literal ring.
    std::vector<long long> omega_pow(static_cast<std::size_t>(k), 1);
    for (int j = 1; j < k; ++j)
        omega_pow[static_cast<std::size_t>(j)] = lit_mul(omega_pow[static_cast<std::size_t>(j - 1)], omega.label());

    // phi: structured label -> literal label via the basis 1, omega, ...
    std::vector<long long> phi(static_cast<std::size_t>(count), -1);
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    for (long long t = 0; t < count; ++t) {
        long long rem = t, image = 0;
        for (int j = 0; j < k; ++j) {
            long long digit = rem % q;
            rem /= q;
            image = lit_add(image, lit_mul(tau[static_cast<std::size_t>(digit)], omega_pow[static_cast<std::size_t>(j)]));
        }
        phi[static_cast<std::size_t>(t)] = image;
        if (seen[static_cast<std::size_t>(image)]) {
            rep.counterexample = "coordinate map is not injective (label " + std::to_string(t) + ")";
            return rep;
        }
        seen[static_cast<std::size_t>(image)] = 1;
    }

    // Full table comparison.
    std::vector<GrElement> elems;
    elems.reserve(static_cast<std::size_t>(count));
    for (long long t = 0; t < count; ++t) elems.push_back(ring.gr_from_label(static_cast<unsigned long long>(t)));
    for (long long xl = 0; xl < count; ++xl) {
        const GrElement& x = elems[static_cast<std::size_t>(xl)];
        for (long long yl = 0; yl < count; ++yl) {
            const GrElement& y = elems[static_cast<std::size_t>(yl)];
            long long s_add = static_cast<long long>(ring.gr_label(ring.add(x, y)));
            long long l_add = lit_add(phi[static_cast<std::size_t>(xl)], phi[static_cast<std::size_t>(yl)]);
            if (phi[static_cast<std::size_t>(s_add)] != l_add) {
                rep.counterexample = triple(xl, yl, "add", phi[static_cast<std::size_t>(s_add)], l_add);
                return rep;
            }
            long long s_mul = static_cast<long long>(ring.gr_label(structured_mul(x, y)));
            long long l_mul = lit_mul(phi[static_cast<std::size_t>(xl)], phi[static_cast<std::size_t>(yl)]);
            if (phi[static_cast<std::size_t>(s_mul)] != l_mul) {
                rep.counterexample = triple(xl, yl, "mul", phi[static_cast<std::size_t>(s_mul)], l_mul);
                return rep;
            }
        }
    }

    rep.pass = true;
    return rep;
}

}  // namespace fhs
