#pragma once

#include <string>
#include <vector>

#include "fhs/poly.hpp"

namespace fhs {

// GF(q), q = p^m, realized as GF(p)[xi]/(omega) for a monic irreducible
// omega of degree m. Elements are integer labels in [0, q): the base-p
// digits of a label are the coefficients of the residue, constant term
// least significant. Multiplication goes through exp/log tables built at
// construction; addition is digitwise mod p.
class FieldCtx {
public:
    // Uses the smallest (by label) monic irreducible of degree m.
    FieldCtx(int p, int m);
    FieldCtx(int p, int m, Poly modulus);

    int p() const { return p_; }
    int m() const { return m_; }
    long long q() const { return q_; }
    const Poly& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws std::domain_error on 0
    int div(int a, int b) const;
    int pow(int a, long long e) const;

    // Smallest label whose multiplicative order is q - 1.
    int generator() const { return generator_; }
    long long mult_order(int a) const;

    // Coefficient vector of the label, m base-p digits.
    std::vector<int> vec(int a) const;
    int from_vec(const std::vector<int>& v) const;
    std::string elem_str(int a) const;

private:
    int slow_mul(int a, int b) const;
    void check_label(int a) const;

    int p_ = 0, m_ = 0;
    long long q_ = 0;
    Poly modulus_;
    int generator_ = 1;
    std::vector<int> exp_;  // exp_[i] = g^i, i in [0, q-1)
    std::vector<int> log_;  // log_[a] for a != 0
};

}  // namespace fhs
