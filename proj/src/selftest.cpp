#include "fhs/selftest.hpp"

#include <map>
#include <memory>
#include <random>

#include "fhs/bounds.hpp"
#include "fhs/numutil.hpp"
#include "fhs/quotient_oracle.hpp"
#include "fhs/ring.hpp"
#include "fhs/search.hpp"

namespace fhs {

namespace {

std::string spot(int p, int m, int k, int r = 0) {
    std::string s = std::to_string(p) + "," + std::to_string(m) + "," + std::to_string(k);
    if (r > 0) s += "," + std::to_string(r);
    return s;
}

}  // namespace

CheckResult check_trace_fibers(int p, int m, int k, int r) {
    CheckResult res{"trace-fibers(" + spot(p, m, k, r) + ")", true, ""};
    auto tower = std::make_shared<Tower>(p, m, r);
    const RingCtx ring(tower, k);
    const long long total = ring.size_capped(1LL << 16);
    if (total > (1LL << 16)) {
        res.pass = false;
        res.detail = "instance too large for exhaustion";
        return res;
    }
    for (int s = 1; s <= r; ++s) {
        if (r % s != 0) continue;
        std::map<unsigned long long, long long> fiber;
        for (long long t = 0; t < total; ++t) {
            const GrElement x = ring.gr_from_label(static_cast<unsigned long long>(t));
            fiber[ring.gr_label(ring.gen_trace(x, s))]++;
        }
        const long long expect_count = ipow_capped(p, m * k * (r - s), 1LL << 62);
        const long long expect_values = ipow_capped(tower->fq.q(), static_cast<int>(s) * k, 1LL << 62);
        if (static_cast<long long>(fiber.size()) != expect_values) {
            res.pass = false;
            res.detail = "level " + std::to_string(s) + ": " + std::to_string(fiber.size()) +
                         " distinct values, expected " + std::to_string(expect_values);
            return res;
        }
        for (const auto& [value, count] : fiber) {
            if (count != expect_count) {
                res.pass = false;
                res.detail = "level " + std::to_string(s) + ": value " + std::to_string(value) +
                             " hit " + std::to_string(count) + " times, expected " +
                             std::to_string(expect_count);
                return res;
            }
        }
    }
    return res;
}

CheckResult check_ring_axioms(int p, int m, int k, int r) {
    CheckResult res{"ring-axioms(" + spot(p, m, k, r) + ")", true, ""};
    auto tower = std::make_shared<Tower>(p, m, r);
    const RingCtx ring(tower, k);
    const long long total = ring.size_capped(1LL << 16);
    if (total > (1LL << 16)) {
        res.pass = false;
        res.detail = "instance too large";
        return res;
    }

    auto probe = [&](long long a, long long b, long long c) -> bool {
        const GrElement x = ring.gr_from_label(static_cast<unsigned long long>(a));
        const GrElement y = ring.gr_from_label(static_cast<unsigned long long>(b));
        const GrElement z = ring.gr_from_label(static_cast<unsigned long long>(c));
        if (!(ring.mul(x, y) == ring.mul(y, x))) {
            res.detail = "commutativity fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            return false;
        }
        if (!(ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z)))) {
            res.detail = "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")";
            return false;
        }
        if (!(ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z)))) {
            res.detail = "distributivity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")";
            return false;
        }
        return true;
    };

    if (total <= 100) {
        for (long long a = 0; a < total; ++a)
            for (long long b = 0; b < total; ++b)
                for (long long c = 0; c < total; ++c)
                    if (!probe(a, b, c)) { res.pass = false; return res; }
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<long long> pick(0, total - 1);
        for (int i = 0; i < 10000; ++i)
            if (!probe(pick(rng), pick(rng), pick(rng))) { res.pass = false; return res; }
    }
    return res;
}

CheckResult check_bound_monotone(long long max_nu) {
    CheckResult res{"bound-monotone", true, ""};
    for (long long nu = 2; nu <= max_nu; ++nu) {
        for (long long l = 2; l <= nu; ++l) {
            if (lg_sharp_bound(nu, l) < lg_floor_bound(nu, l)) {
                res.pass = false;
                res.detail = "sharp bound below floor form at nu=" + std::to_string(nu) +
                             ", l=" + std::to_string(l);
                return res;
            }
        }
    }
    return res;
}

CheckResult check_pair_bound_closed_form(long long budget) {
    CheckResult res{"pair-bound-closed-form", true, ""};
    SearchFilter filter;
    filter.budget = budget;
    for (const auto& row : search_rows(filter)) {
        if (row.z < 2) continue;  // the closed form assumes two or more classes
        const long long d = row.lambda;
        const long long e = (ipow_capped(row.q, row.rho, 1LL << 62) - 1) / row.z;
        const Rational closed = make_rational(d * (2 * row.nu - 1) - d * e * (row.z - 2), 2 * row.nu - 1);
        if (!(pair_bound(row.nu, row.l) == closed)) {
            res.pass = false;
            res.detail = "mismatch at p=" + std::to_string(row.p) + " m=" + std::to_string(row.m) +
                         " k=" + std::to_string(row.k) + " r=" + std::to_string(row.r) +
                         " z=" + std::to_string(row.z) + " rho=" + std::to_string(row.rho);
            return res;
        }
    }
    return res;
}

std::vector<CheckResult> run_selftest(const std::vector<std::array<int, 3>>& extra_oracles,
                                      bool corrupt_mul) {
    std::vector<CheckResult> out;

    std::vector<std::array<int, 3>> oracles{{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {3, 1, 2}};
    oracles.insert(oracles.end(), extra_oracles.begin(), extra_oracles.end());
    for (const auto& [p, m, k] : oracles) {
        auto rep = quotient_oracle(p, m, k, 1LL << 16, corrupt_mul);
        out.push_back({"quotient(" + spot(p, m, k) + ")", rep.pass, rep.counterexample});
    }

    out.push_back(check_trace_fibers(2, 1, 2, 2));
    out.push_back(check_trace_fibers(2, 2, 2, 2));

    out.push_back(check_ring_axioms(2, 1, 2, 2));
    out.push_back(check_ring_axioms(3, 1, 2, 2));
    out.push_back(check_ring_axioms(2, 2, 2, 2));

    out.push_back(check_bound_monotone(512));
    out.push_back(check_pair_bound_closed_form(1LL << 12));
    return out;
}

}  // namespace fhs
