#include "fhs/params.hpp"

#include <numeric>

#include "fhs/numutil.hpp"

namespace fhs {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
    std::string out = "invalid parameters:";
    for (const auto& s : issues) out += "\n  - " + s;
    return out;
}

}  // namespace

ParamError::ParamError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<std::string> FhsParams::check(const RawParams& w) {
    std::vector<std::string> issues;
    if (!is_prime(w.p)) issues.push_back("p must be prime (got " + std::to_string(w.p) + ")");
    if (w.m < 1) issues.push_back("m must be positive");
    if (w.k < 1) issues.push_back("k must be positive");
    if (w.r < 1) issues.push_back("r must be positive");
    if (w.z < 1) issues.push_back("z must be positive");
    if (w.s < 1) issues.push_back("s must be positive");
    if (w.gamma_label && w.rho) issues.push_back("give either a gamma label or a rank, not both");
    if (!issues.empty()) return issues;

    const long long budget = w.budget > 0 ? w.budget : kDefaultBudget;
    const long long q = ipow_capped(w.p, w.m, budget);
    if (q > budget) {
        issues.push_back("budget exceeded: q = p^m is larger than " + std::to_string(budget));
        return issues;
    }
    const long long qr = ipow_capped(q, w.r, budget);
    if (qr > budget) {
        issues.push_back("budget exceeded: q^r is larger than " + std::to_string(budget));
        return issues;
    }

    if ((q - 1) % w.z != 0)
        issues.push_back("z does not divide q-1 (z=" + std::to_string(w.z) + ", q-1=" + std::to_string(q - 1) + ")");
    if (w.z >= 1 && (q - 1) % w.z == 0) {
        const long long n = (qr - 1) / w.z;
        if (n > kMaxPeriod)
            issues.push_back("budget exceeded: period n = " + std::to_string(n) + " is larger than " +
                             std::to_string(kMaxPeriod));
    }
    const long long ratio = (qr - 1) / (q - 1);
    if (std::gcd(ratio, w.z) != 1)
        issues.push_back("gcd((q^r-1)/(q-1), z) = " + std::to_string(std::gcd(ratio, w.z)) + ", must be 1");
    if (std::gcd(w.s, qr - 1) != 1)
        issues.push_back("gcd(s, q^r-1) = " + std::to_string(std::gcd(w.s, qr - 1)) + ", must be 1");

    // The alphabet labels must be representable.
    if (ipow_capped(q, w.k, (1LL << 62)) > (1LL << 62))
        issues.push_back("alphabet label space q^k exceeds 62 bits");

    if (w.rho) {
        const int cap = std::min(w.r, w.k);
        if (*w.rho < 1 || *w.rho > cap)
            issues.push_back("rho must lie in [1, min(r,k)] = [1, " + std::to_string(cap) + "]");
    }
    return issues;
}

FhsParams FhsParams::build(const RawParams& w) {
    auto issues = check(w);
    if (!issues.empty()) throw ParamError(std::move(issues));

    FhsParams P;
    P.p = w.p;
    P.m = w.m;
    P.k = w.k;
    P.r = w.r;
    P.z = w.z;
    P.s = w.s;
    P.q = ipow_capped(w.p, w.m, 1LL << 62);
    P.qr = ipow_capped(P.q, w.r, 1LL << 62);
    P.n = (P.qr - 1) / w.z;
    P.tower = std::make_shared<Tower>(w.p, w.m, w.r);
    P.ring = std::make_shared<RingCtx>(P.tower, w.k);
    P.alpha = P.tower->fqr.generator();
    const long long ord = P.qr - 1;
    P.beta = P.tower->fqr.pow(P.alpha, (w.z % ord) * (w.s % ord) % ord);

    if (w.gamma_label) {
        if (!P.ring->gr_label_fits()) {
            issues.push_back("gamma label space exceeds 64 bits; select gamma by rank instead");
            throw ParamError(std::move(issues));
        }
        unsigned long long space = 1;
        bool fits = true;
        for (int j = 0; j < w.k && fits; ++j) {
            if (space > (1ULL << 62) / static_cast<unsigned long long>(P.qr)) fits = false;
            else space *= static_cast<unsigned long long>(P.qr);
        }
        if (fits && *w.gamma_label >= space) {
            issues.push_back("gamma label " + std::to_string(*w.gamma_label) + " is out of range");
            throw ParamError(std::move(issues));
        }
        P.gamma = P.ring->gr_from_label(*w.gamma_label);
        if (P.gamma.comps[0] != P.tower->fqr.one()) {
            issues.push_back("gamma is not in the principal unit group (leading coordinate must be 1)");
            throw ParamError(std::move(issues));
        }
    } else {
        const int want = w.rho.value_or(1);
        if (want < 1 || want > std::min(w.r, w.k)) {
            issues.push_back("rho must lie in [1, min(r,k)]");
            throw ParamError(std::move(issues));
        }
        auto gammas = enumerate_gammas(*P.ring, want, 1);
        if (gammas.empty()) {
            issues.push_back("no gamma of rank " + std::to_string(want) + " exists");
            throw ParamError(std::move(issues));
        }
        P.gamma = std::move(gammas.front());
    }
    P.rho = P.ring->rank(P.gamma);
    return P;
}

Predicted predicted_parameters(const FhsParams& P) {
    Predicted out;
    out.nu = P.n;
    out.N = P.z;
    out.l = ipow_capped(P.q, P.rho, 1LL << 62);
    out.lambda = (ipow_capped(P.q, P.r - P.rho, 1LL << 62) - 1) / P.z;
    return out;
}

std::vector<GrElement> enumerate_gammas(const RingCtx& ring, int target_rho, std::size_t limit) {
    const int k = ring.k();
    const int r = ring.fqr().r();
    if (target_rho < 1 || target_rho > std::min(r, k))
        throw std::invalid_argument("enumerate_gammas: rank out of range");

    std::vector<GrElement> out;
    if (limit == 0) return out;

    const long long ord = ring.fqr().order();
    // Mixed-radix counter over the k-1 free coordinates, coordinate 1 least
    // significant; coordinate 0 is pinned to 1.
    std::vector<long long> digits(static_cast<std::size_t>(k > 1 ? k - 1 : 0), 0);
    while (true) {
        GrElement g = ring.one();
        for (int j = 1; j < k; ++j)
            g.comps[static_cast<std::size_t>(j)] = ring.fqr().from_label(digits[static_cast<std::size_t>(j - 1)]);
        if (ring.rank(g) == target_rho) {
            out.push_back(std::move(g));
            if (out.size() >= limit) break;
        }
        // Advance the counter; stop when it wraps.
        int pos = 0;
        while (pos < k - 1) {
            if (++digits[static_cast<std::size_t>(pos)] < ord) break;
            digits[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos >= k - 1) break;
    }
    return out;
}

}  // namespace fhs
