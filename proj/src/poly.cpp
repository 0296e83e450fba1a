#include "fhs/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "fhs/numutil.hpp"

namespace fhs {

Poly::Poly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw std::invalid_argument("Poly: modulus must be at least 2");
    for (auto& v : c_) {
        v %= p_;
        if (v < 0) v += p_;
    }
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::zero(int p) { return Poly(p, {}); }

Poly Poly::one(int p) { return Poly(p, {1}); }

Poly Poly::xpow(int p, int d) {
    std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
    c.back() = 1;
    return Poly(p, std::move(c));
}

Poly Poly::from_label(int p, long long label) {
    if (label < 0) throw std::invalid_argument("Poly::from_label: negative label");
    std::vector<int> c;
    while (label > 0) {
        c.push_back(static_cast<int>(label % p));
        label /= p;
    }
    return Poly(p, std::move(c));
}

Poly Poly::parse(int p, const std::string& text) {
    std::vector<int> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) c.push_back(std::stoi(tok));
    return Poly(p, std::move(c));
}

int Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

long long Poly::label() const {
    long long acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p_ + *it;
    return acc;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

namespace {

void check_same_field(const Poly& a, const Poly& b) {
    if (a.p() != b.p()) throw std::invalid_argument("polynomial modulus mismatch");
}

}  // namespace

Poly add(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p();
    return Poly(a.p(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i))) % a.p();
    return Poly(a.p(), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.p());
    std::vector<int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = (c[i + j] + a.coeffs()[i] * b.coeffs()[j]) % a.p();
    }
    return Poly(a.p(), std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const int p = a.p();
    std::vector<int> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {Poly::zero(p), a};
    std::vector<int> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);

    // Inverse of the leading coefficient mod p.
    int lead = b.coeffs().back();
    int lead_inv = 1;
    for (int i = 1; i < p; ++i)
        if (lead * i % p == 1) { lead_inv = i; break; }

    for (int d = a.degree(); d >= db; --d) {
        int top = rem[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        int f = top * lead_inv % p;
        quot[static_cast<std::size_t>(d - db)] = f;
        for (int i = 0; i <= db; ++i) {
            auto& r = rem[static_cast<std::size_t>(d - db + i)];
            r = ((r - f * b.coeff(i)) % p + p) % p;
        }
    }
    return {Poly(p, std::move(quot)), Poly(p, std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // Normalize monic.
    int lead = a.coeffs().back();
    if (lead == 1) return a;
    int inv = 1;
    for (int i = 1; i < a.p(); ++i)
        if (lead * i % a.p() == 1) { inv = i; break; }
    std::vector<int> c(a.coeffs());
    for (auto& v : c) v = v * inv % a.p();
    return Poly(a.p(), std::move(c));
}

Poly powmod(const Poly& base, long long e, const Poly& modulus) {
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    Poly acc = Poly::one(base.p());
    Poly b = mod(base, modulus);
    while (e > 0) {
        if (e & 1) acc = mod(mul(acc, b), modulus);
        b = mod(mul(b, b), modulus);
        e >>= 1;
    }
    return acc;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be at least 1");
    if (!f.is_monic()) throw std::invalid_argument("is_irreducible: polynomial must be monic");
    const int d = f.degree();
    if (d == 1) return true;
    const int p = f.p();
    const Poly x = Poly::xpow(p, 1);
    // x^{p^i} mod f, i = 1 .. d/2: any common factor with x^{p^i} - x is a
    // factor of degree dividing i.
    Poly t = x;
    for (int i = 1; i <= d / 2; ++i) {
        t = powmod(t, p, f);
        Poly g = poly_gcd(f, sub(t, x));
        if (g.degree() != 0) return false;
    }
    return true;
}

Poly find_irreducible(int p, int d) {
    if (d < 1) throw std::invalid_argument("find_irreducible: degree must be at least 1");
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    const long long span = ipow_capped(p, d, (1LL << 62));
    for (long long t = 0; t < span; ++t) {
        Poly cand = add(Poly::from_label(p, t), Poly::xpow(p, d));
        if (is_irreducible(cand)) return cand;
    }
    throw std::logic_error("find_irreducible: exhausted search space");  // unreachable
}

}  // namespace fhs
