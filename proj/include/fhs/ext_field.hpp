#pragma once

#include <string>
#include <vector>

#include "fhs/field.hpp"

namespace fhs {

// Element of GF(q^r): r GF(q) labels, the coefficient vector with respect
// to the power basis 1, x, ..., x^{r-1}, constant coordinate first.
using FE = std::vector<int>;

// Polynomials over GF(q) as label vectors, constant term first (trailing
// zeros allowed). Only what the extension machinery needs.
bool is_irreducible_over(const FieldCtx& base, const std::vector<int>& f);
std::vector<int> find_irreducible_over(const FieldCtx& base, int d);

// GF(q^r) built as GF(q)[x]/(f) for a monic irreducible f of degree r.
// The base context must outlive this object (see Tower).
class ExtFieldCtx {
public:
    // Uses the smallest (by label over GF(q)) monic irreducible of degree r.
    ExtFieldCtx(const FieldCtx& base, int r);
    ExtFieldCtx(const FieldCtx& base, int r, std::vector<int> modulus);

    const FieldCtx& base() const { return *base_; }
    int r() const { return r_; }
    long long order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::string modulus_str() const;

    FE zero() const;
    FE one() const;
    FE x() const;
    FE from_base(int a) const;  // constant embedding of GF(q)
    bool is_zero(const FE& a) const;
    bool in_base(const FE& a) const;  // all non-constant coordinates zero

    FE add(const FE& a, const FE& b) const;
    FE sub(const FE& a, const FE& b) const;
    FE neg(const FE& a) const;
    FE mul(const FE& a, const FE& b) const;
    FE scale(int c, const FE& a) const;  // c in GF(q)
    FE inv(const FE& a) const;           // throws std::domain_error on 0
    FE div(const FE& a, const FE& b) const;
    FE pow(const FE& a, long long e) const;

    // a^{q^s}; s must divide r.
    FE frobenius(const FE& a, int s) const;
    // Sum of the q^s-power conjugates: lands in the subfield GF(q^s),
    // returned in the ambient representation. s must divide r.
    FE trace_to(const FE& a, int s) const;
    // Trace down to GF(q), as a base-field label.
    int trace(const FE& a) const;

    // Smallest label whose multiplicative order is q^r - 1.
    const FE& generator() const { return generator_; }
    long long mult_order(const FE& a) const;

    long long label(const FE& a) const;  // sum of coord labels times q^i
    FE from_label(long long t) const;

private:
    void check_elem(const FE& a) const;

    const FieldCtx* base_;
    int r_ = 0;
    long long order_ = 0;
    std::vector<int> modulus_;
    std::vector<FE> red_;          // x^{r+i} mod f
    std::vector<int> trace_basis_;  // trace of each power-basis element
    FE generator_;
};

// The tower GF(p) in GF(q) in GF(q^r) with deterministically chosen moduli.
// Not copyable: the extension context points at the base field.
struct Tower {
    FieldCtx fq;
    ExtFieldCtx fqr;

    Tower(int p, int m, int r) : fq(p, m), fqr(fq, r) {}
    Tower(const Tower&) = delete;
    Tower& operator=(const Tower&) = delete;
};

}  // namespace fhs
