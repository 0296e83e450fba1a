#include "fhs/field.hpp"

#include <stdexcept>

#include "fhs/numutil.hpp"

namespace {
// Hard cap on table size; parameter validation enforces tighter budgets.
constexpr long long kMaxFieldOrder = 1LL << 22;
}  // namespace

namespace fhs {

FieldCtx::FieldCtx(int p, int m) : FieldCtx(p, m, find_irreducible(p, m)) {}

FieldCtx::FieldCtx(int p, int m, Poly modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("FieldCtx: p must be prime");
    if (m < 1) throw std::invalid_argument("FieldCtx: extension degree must be positive");
    if (modulus_.p() != p) throw std::invalid_argument("FieldCtx: modulus has wrong characteristic");
    if (modulus_.degree() != m) throw std::invalid_argument("FieldCtx: modulus degree mismatch");
    if (!is_irreducible(modulus_)) throw std::invalid_argument("FieldCtx: modulus is reducible");

    q_ = ipow_capped(p, m, kMaxFieldOrder);
    if (q_ > kMaxFieldOrder) throw std::invalid_argument("FieldCtx: field order too large");

    // Find the generator before any tables exist, with polynomial arithmetic.
    const auto factors = prime_factors(q_ - 1);
    for (int a = 1; a < q_; ++a) {
        bool full_order = true;
        for (long long f : factors) {
            Poly r = powmod(Poly::from_label(p_, a), (q_ - 1) / f, modulus_);
            if (r == Poly::one(p_)) { full_order = false; break; }
        }
        if (full_order) { generator_ = a; break; }
    }

    exp_.resize(static_cast<std::size_t>(q_ - 1));
    log_.assign(static_cast<std::size_t>(q_), 0);
    int cur = 1;
    for (long long i = 0; i < q_ - 1; ++i) {
        exp_[static_cast<std::size_t>(i)] = cur;
        log_[static_cast<std::size_t>(cur)] = static_cast<int>(i);
        cur = slow_mul(cur, generator_);
    }
}

int FieldCtx::slow_mul(int a, int b) const {
    Poly r = fhs::mod(fhs::mul(Poly::from_label(p_, a), Poly::from_label(p_, b)), modulus_);
    return static_cast<int>(r.label());
}

void FieldCtx::check_label(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("FieldCtx: label out of range");
}

int FieldCtx::add(int a, int b) const {
    check_label(a);
    check_label(b);
    if (p_ == 2) return a ^ b;
    int out = 0, place = 1;
    while (a > 0 || b > 0) {
        out += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

int FieldCtx::neg(int a) const {
    check_label(a);
    if (p_ == 2) return a;
    int out = 0, place = 1;
    while (a > 0) {
        out += (p_ - a % p_) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

int FieldCtx::sub(int a, int b) const { return add(a, neg(b)); }

int FieldCtx::mul(int a, int b) const {
    check_label(a);
    check_label(b);
    if (a == 0 || b == 0) return 0;
    long long e = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[static_cast<std::size_t>(e)];
}

int FieldCtx::inv(int a) const {
    check_label(a);
    if (a == 0) throw std::domain_error("FieldCtx: inverse of zero");
    long long e = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
    return exp_[static_cast<std::size_t>(e)];
}

int FieldCtx::div(int a, int b) const { return mul(a, inv(b)); }

int FieldCtx::pow(int a, long long e) const {
    check_label(a);
    if (a == 0) {
        if (e < 0) throw std::domain_error("FieldCtx: inverse of zero");
        return e == 0 ? 1 : 0;
    }
    long long ord = q_ - 1;
    long long em = e % ord;
    if (em < 0) em += ord;
    long long le = static_cast<long long>(log_[static_cast<std::size_t>(a)]) * em % ord;
    return exp_[static_cast<std::size_t>(le)];
}

long long FieldCtx::mult_order(int a) const {
    check_label(a);
    if (a == 0) throw std::domain_error("FieldCtx: order of zero");
    long long ord = q_ - 1;
    for (long long f : prime_factors(q_ - 1)) {
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return ord;
}

std::vector<int> FieldCtx::vec(int a) const {
    check_label(a);
    std::vector<int> v(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
        v[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
    }
    return v;
}

int FieldCtx::from_vec(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != m_)
        throw std::invalid_argument("FieldCtx: coefficient vector has wrong length");
    long long acc = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (*it < 0 || *it >= p_) throw std::invalid_argument("FieldCtx: digit out of range");
        acc = acc * p_ + *it;
    }
    return static_cast<int>(acc);
}

std::string FieldCtx::elem_str(int a) const {
    auto v = vec(a);
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace fhs
