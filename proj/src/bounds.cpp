#include "fhs/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "fhs/numutil.hpp"

namespace fhs {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational rat_sub(const Rational& a, const Rational& b) {
    return make_rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

long long ceil_of(const Rational& r) {
    long long q = r.num / r.den;
    if (r.num % r.den != 0 && r.num > 0) ++q;
    return q;
}

long long lg_floor_bound(long long nu, long long l) {
    if (nu < 2) throw std::invalid_argument("lg_floor_bound: length must be at least 2");
    if (l < 1) throw std::invalid_argument("lg_floor_bound: alphabet must be nonempty");
    const long long eps = nu % l;
    return floor_div((nu - eps) * (nu + eps - l), l * (nu - 1));
}

long long lg_sharp_bound(long long nu, long long l) {
    if (nu < 1 || l < 1) throw std::invalid_argument("lg_sharp_bound: arguments must be positive");
    if (nu == l) return 0;
    return nu / l;
}

PengFanResult peng_fan_bound(long long nu, long long N, long long l, long long Ha, long long Hc) {
    if (N < 2) throw std::invalid_argument("peng_fan_bound: needs at least two sequences");
    if (nu < 2) throw std::invalid_argument("peng_fan_bound: length must be at least 2");
    PengFanResult res;
    res.I = nu * N / l;
    res.rhs = 2 * res.I * nu * N - (res.I + 1) * res.I * l;
    auto lhs_at = [&](long long ha, long long hc) {
        return (nu - 1) * N * ha + (N - 1) * N * nu * hc;
    };
    res.lhs = lhs_at(Ha, Hc);
    res.holds = res.lhs >= res.rhs;
    res.minimal = res.holds &&
                  (Ha == 0 || lhs_at(Ha - 1, Hc) < res.rhs) &&
                  (Hc == 0 || lhs_at(Ha, Hc - 1) < res.rhs);
    return res;
}

Rational pair_bound(long long nu, long long l) {
    if (nu < 1 || l < 1) throw std::invalid_argument("pair_bound: arguments must be positive");
    const long long I = 2 * nu / l;
    return make_rational(4 * I * nu - (I + 1) * I * l, 4 * nu - 2);
}

}  // namespace fhs
