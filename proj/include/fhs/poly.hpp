#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fhs {

// Dense polynomial over GF(p). Coefficients are stored constant term first
// and kept reduced mod p; the zero polynomial has an empty coefficient
// vector and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(int p, std::vector<int> coeffs);

    static Poly zero(int p);
    static Poly one(int p);
    static Poly xpow(int p, int d);
    // Base-p digits of `label`, constant term least significant.
    static Poly from_label(int p, long long label);
    // Inverse of str(): "1,1,1" over p=2 is 1 + x + x^2.
    static Poly parse(int p, const std::string& text);

    int p() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    int coeff(int i) const;
    const std::vector<int>& coeffs() const { return c_; }

    long long label() const;
    std::string str() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    int p_ = 2;
    std::vector<int> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
Poly powmod(const Poly& base, long long e, const Poly& modulus);

// True iff the monic polynomial f (degree >= 1) has no nontrivial factor
// over GF(p). Uses the distinct-degree criterion gcd(f, x^{p^i} - x) = 1
// for i up to deg(f)/2.
bool is_irreducible(const Poly& f);

// Smallest (by label) monic irreducible of degree d over GF(p).
Poly find_irreducible(int p, int d);

}  // namespace fhs
