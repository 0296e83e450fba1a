#include "fhs/numutil.hpp"

#include <stdexcept>

namespace fhs {

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long long ipow_capped(long long base, int exp, long long cap) {
    if (base < 0 || exp < 0) throw std::invalid_argument("ipow_capped: negative input");
    long long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && acc > cap / base) return cap + 1;
        acc *= base;
        if (acc > cap) return cap + 1;
    }
    return acc;
}

long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace fhs
