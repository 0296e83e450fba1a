#include "fhs/search.hpp"

#include <map>
#include <numeric>
#include <tuple>

#include "fhs/numutil.hpp"

namespace fhs {

namespace {

std::vector<int> primes_upto(int cap) {
    std::vector<int> out;
    for (int p = 2; p <= cap; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

std::vector<SearchRow> search_rows(const SearchFilter& f) {
    std::vector<SearchRow> rows;
    const long long budget = f.budget > 0 ? f.budget : kDefaultBudget;

    std::vector<int> ps;
    if (f.p) ps.push_back(*f.p);
    else ps = primes_upto(static_cast<int>(std::min<long long>(f.p_cap, budget)));

    for (int p : ps) {
        if (!is_prime(p)) continue;
        for (int m = f.m.value_or(1);; ++m) {
            if (f.m && m != *f.m) break;
            const long long q = ipow_capped(p, m, budget);
            if (q > budget) break;
            const int k_hi = f.k ? *f.k : f.k_cap;
            for (int k = f.k.value_or(1); k <= k_hi; ++k) {
                for (int r = f.r.value_or(1);; ++r) {
                    if (f.r && r != *f.r) break;
                    const long long qr = ipow_capped(q, r, budget);
                    if (qr > budget) break;
                    for (long long z = f.z.value_or(1); z <= q - 1; ++z) {
                        if (f.z && z != *f.z) break;
                        RawParams raw;
                        raw.p = p;
                        raw.m = m;
                        raw.k = k;
                        raw.r = r;
                        raw.z = z;
                        raw.s = 1;
                        raw.budget = budget;
                        if (!FhsParams::check(raw).empty()) continue;
                        for (int rho = 1; rho <= std::min(r, k); ++rho) {
                            SearchRow row;
                            row.p = p;
                            row.m = m;
                            row.k = k;
                            row.r = r;
                            row.z = z;
                            row.s = 1;
                            row.rho = rho;
                            row.q = q;
                            row.qr = qr;
                            row.nu = (qr - 1) / z;
                            row.N = z;
                            row.l = ipow_capped(q, rho, 1LL << 62);
                            row.lambda = (ipow_capped(q, r - rho, 1LL << 62) - 1) / z;
                            rows.push_back(row);
                        }
                    }
                    if (f.r) break;
                }
            }
            if (f.m) break;
        }
    }
    return rows;
}

std::string search_csv(const std::vector<SearchRow>& rows) {
    std::string out = "p,m,k,r,z,s,rho,nu,N,l,lambda\n";
    for (const auto& w : rows) {
        out += std::to_string(w.p) + ',' + std::to_string(w.m) + ',' + std::to_string(w.k) + ',' +
               std::to_string(w.r) + ',' + std::to_string(w.z) + ',' + std::to_string(w.s) + ',' +
               std::to_string(w.rho) + ',' + std::to_string(w.nu) + ',' + std::to_string(w.N) + ',' +
               std::to_string(w.l) + ',' + std::to_string(w.lambda) + '\n';
    }
    return out;
}

void for_each_family(const SearchFilter& filter,
                     const std::function<void(const FhsParams&, const Family&)>& fn) {
    const auto rows = search_rows(filter);
    std::map<std::tuple<int, int, int>, std::shared_ptr<const Tower>> towers;
    std::map<std::tuple<int, int, int, int>, std::shared_ptr<const RingCtx>> rings;

    for (const auto& row : rows) {
        auto tkey = std::make_tuple(row.p, row.m, row.r);
        auto it = towers.find(tkey);
        if (it == towers.end())
            it = towers.emplace(tkey, std::make_shared<Tower>(row.p, row.m, row.r)).first;
        auto rkey = std::make_tuple(row.p, row.m, row.r, row.k);
        auto rit = rings.find(rkey);
        if (rit == rings.end())
            rit = rings.emplace(rkey, std::make_shared<RingCtx>(it->second, row.k)).first;

        FhsParams P;
        P.p = row.p;
        P.m = row.m;
        P.k = row.k;
        P.r = row.r;
        P.z = row.z;
        P.s = row.s;
        P.q = row.q;
        P.qr = row.qr;
        P.n = row.nu;
        P.tower = it->second;
        P.ring = rit->second;
        P.alpha = P.tower->fqr.generator();
        const long long ord = P.qr - 1;
        P.beta = P.tower->fqr.pow(P.alpha, (P.z % ord) * (P.s % ord) % ord);
        auto gammas = enumerate_gammas(*P.ring, row.rho, 1);
        P.gamma = std::move(gammas.front());
        P.rho = row.rho;

        fn(P, build_family(P));
    }
}

}  // namespace fhs
