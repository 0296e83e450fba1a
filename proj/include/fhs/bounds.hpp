#pragma once

namespace fhs {

// Exact rational in lowest terms, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);
Rational rat_sub(const Rational& a, const Rational& b);
long long ceil_of(const Rational& r);

// Floor form of the Lempel-Greenberger autocorrelation bound for a single
// sequence of length nu over l symbols.
long long lg_floor_bound(long long nu, long long l);

// Sharp form: the quotient of nu by l, except 0 when nu = l.
long long lg_sharp_bound(long long nu, long long l);

struct PengFanResult {
    long long I = 0;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;    // lhs >= rhs
    bool minimal = false;  // holds, and decrementing either peak breaks it
};

// Family bound coupling the auto and cross peaks of N sequences.
PengFanResult peng_fan_bound(long long nu, long long N, long long l, long long Ha, long long Hc);

// Lower bound on the joint peak of a pair of distinct sequences, exact.
Rational pair_bound(long long nu, long long l);

}  // namespace fhs
