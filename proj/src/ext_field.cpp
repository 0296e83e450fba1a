#include "fhs/ext_field.hpp"

#include <stdexcept>

#include "fhs/numutil.hpp"

namespace fhs {

namespace {

constexpr long long kMaxExtOrder = 1LL << 22;

using PolyQ = std::vector<int>;  // labels over GF(q), constant term first

int pq_degree(const PolyQ& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
    return d;
}

PolyQ pq_trim(PolyQ f) {
    f.resize(static_cast<std::size_t>(pq_degree(f) + 1));
    return f;
}

PolyQ pq_sub(const FieldCtx& F, const PolyQ& a, const PolyQ& b) {
    PolyQ c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int av = i < a.size() ? a[i] : 0;
        int bv = i < b.size() ? b[i] : 0;
        c[i] = F.sub(av, bv);
    }
    return pq_trim(std::move(c));
}

PolyQ pq_mul(const FieldCtx& F, const PolyQ& a, const PolyQ& b) {
    int da = pq_degree(a), db = pq_degree(b);
    if (da < 0 || db < 0) return {};
    PolyQ c(static_cast<std::size_t>(da + db) + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = c[static_cast<std::size_t>(i + j)];
            slot = F.add(slot, F.mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
        }
    }
    return c;
}

PolyQ pq_mod(const FieldCtx& F, PolyQ a, const PolyQ& b) {
    int db = pq_degree(b);
    if (db < 0) throw std::invalid_argument("pq_mod: division by zero");
    int lead_inv = F.inv(b[static_cast<std::size_t>(db)]);
    for (int d = pq_degree(a); d >= db; d = pq_degree(a)) {
        int f = F.mul(a[static_cast<std::size_t>(d)], lead_inv);
        for (int i = 0; i <= db; ++i) {
            auto& slot = a[static_cast<std::size_t>(d - db + i)];
            slot = F.sub(slot, F.mul(f, b[static_cast<std::size_t>(i)]));
        }
        a = pq_trim(std::move(a));
    }
    return a;
}

PolyQ pq_gcd(const FieldCtx& F, PolyQ a, PolyQ b) {
    while (pq_degree(b) >= 0) {
        PolyQ r = pq_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = pq_degree(a);
    if (d >= 0 && a[static_cast<std::size_t>(d)] != 1) {
        int inv = F.inv(a[static_cast<std::size_t>(d)]);
        for (auto& v : a) v = F.mul(v, inv);
    }
    return a;
}

PolyQ pq_powmod(const FieldCtx& F, PolyQ base, long long e, const PolyQ& modulus) {
    PolyQ acc{1};
    base = pq_mod(F, std::move(base), modulus);
    while (e > 0) {
        if (e & 1) acc = pq_mod(F, pq_mul(F, acc, base), modulus);
        base = pq_mod(F, pq_mul(F, base, base), modulus);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_irreducible_over(const FieldCtx& base, const std::vector<int>& f) {
    int d = pq_degree(f);
    if (d < 1) throw std::invalid_argument("is_irreducible_over: degree must be at least 1");
    if (f[static_cast<std::size_t>(d)] != 1)
        throw std::invalid_argument("is_irreducible_over: polynomial must be monic");
    if (d == 1) return true;
    const PolyQ x{0, 1};
    PolyQ t = x;
    for (int i = 1; i <= d / 2; ++i) {
        t = pq_powmod(base, t, base.q(), f);
        PolyQ g = pq_gcd(base, f, pq_sub(base, t, x));
        if (pq_degree(g) != 0) return false;
    }
    return true;
}

std::vector<int> find_irreducible_over(const FieldCtx& base, int d) {
    if (d < 1) throw std::invalid_argument("find_irreducible_over: degree must be at least 1");
    const long long q = base.q();
    const long long span = ipow_capped(q, d, (1LL << 62));
    for (long long t = 0; t < span; ++t) {
        PolyQ cand(static_cast<std::size_t>(d) + 1, 0);
        long long v = t;
        for (int i = 0; i < d; ++i) {
            cand[static_cast<std::size_t>(i)] = static_cast<int>(v % q);
            v /= q;
        }
        cand[static_cast<std::size_t>(d)] = 1;
        if (is_irreducible_over(base, cand)) return cand;
    }
    throw std::logic_error("find_irreducible_over: exhausted search space");  // unreachable
}

ExtFieldCtx::ExtFieldCtx(const FieldCtx& base, int r)
    : ExtFieldCtx(base, r, find_irreducible_over(base, r)) {}

ExtFieldCtx::ExtFieldCtx(const FieldCtx& base, int r, std::vector<int> modulus)
    : base_(&base), r_(r), modulus_(std::move(modulus)) {
    if (r < 1) throw std::invalid_argument("ExtFieldCtx: extension degree must be positive");
    if (pq_degree(modulus_) != r || modulus_[static_cast<std::size_t>(r)] != 1)
        throw std::invalid_argument("ExtFieldCtx: modulus must be monic of degree r");
    if (!is_irreducible_over(base, modulus_))
        throw std::invalid_argument("ExtFieldCtx: modulus is reducible");
    modulus_.resize(static_cast<std::size_t>(r) + 1);

    order_ = ipow_capped(base.q(), r, kMaxExtOrder);
    if (order_ > kMaxExtOrder) throw std::invalid_argument("ExtFieldCtx: field order too large");

    // red_[i] = x^{r+i} mod f, built by shifting and reducing.
    red_.resize(static_cast<std::size_t>(r_ > 1 ? r_ - 1 : 1));
    FE head(static_cast<std::size_t>(r_), 0);
    for (int j = 0; j < r_; ++j)
        head[static_cast<std::size_t>(j)] = base.neg(modulus_[static_cast<std::size_t>(j)]);
    red_[0] = head;
    for (std::size_t i = 1; i < red_.size(); ++i) {
        const FE& prev = red_[i - 1];
        FE nxt(static_cast<std::size_t>(r_), 0);
        int carry = prev[static_cast<std::size_t>(r_ - 1)];
        for (int j = r_ - 1; j >= 1; --j) nxt[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
        nxt[0] = 0;
        if (carry != 0)
            for (int j = 0; j < r_; ++j)
                nxt[static_cast<std::size_t>(j)] =
                    base.add(nxt[static_cast<std::size_t>(j)], base.mul(carry, red_[0][static_cast<std::size_t>(j)]));
        red_[i] = std::move(nxt);
    }

    // Trace of each power-basis element; the trace map is then one dot
    // product per call.
    trace_basis_.resize(static_cast<std::size_t>(r_), 0);
    for (int j = 0; j < r_; ++j) {
        FE e(static_cast<std::size_t>(r_), 0);
        e[static_cast<std::size_t>(j)] = 1;
        FE acc = e;
        FE t = e;
        for (int i = 1; i < r_; ++i) {
            t = pow(t, base.q());
            acc = add(acc, t);
        }
        for (int i = 1; i < r_; ++i)
            if (acc[static_cast<std::size_t>(i)] != 0)
                throw std::logic_error("ExtFieldCtx: trace left the base field");
        trace_basis_[static_cast<std::size_t>(j)] = acc[0];
    }

    const auto factors = prime_factors(order_ - 1);
    for (long long t = 1; t < order_; ++t) {
        FE cand = from_label(t);
        bool full_order = true;
        for (long long f : factors) {
            if (pow(cand, (order_ - 1) / f) == one()) { full_order = false; break; }
        }
        if (full_order) { generator_ = std::move(cand); break; }
    }
}

void ExtFieldCtx::check_elem(const FE& a) const {
    if (static_cast<int>(a.size()) != r_)
        throw std::invalid_argument("ExtFieldCtx: element has wrong length");
}

FE ExtFieldCtx::zero() const { return FE(static_cast<std::size_t>(r_), 0); }

FE ExtFieldCtx::one() const { return from_base(1); }

FE ExtFieldCtx::x() const {
    if (r_ == 1) {
        // Degree-1 extension: x is the root of the modulus, a base element.
        return FE{base_->neg(modulus_[0])};
    }
    FE e = zero();
    e[1] = 1;
    return e;
}

FE ExtFieldCtx::from_base(int a) const {
    FE e = zero();
    e[0] = a;
    return e;
}

bool ExtFieldCtx::is_zero(const FE& a) const {
    check_elem(a);
    for (int v : a)
        if (v != 0) return false;
    return true;
}

bool ExtFieldCtx::in_base(const FE& a) const {
    check_elem(a);
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

FE ExtFieldCtx::add(const FE& a, const FE& b) const {
    check_elem(a);
    check_elem(b);
    FE c(a);
    for (int i = 0; i < r_; ++i)
        c[static_cast<std::size_t>(i)] = base_->add(c[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return c;
}

FE ExtFieldCtx::sub(const FE& a, const FE& b) const {
    check_elem(a);
    check_elem(b);
    FE c(a);
    for (int i = 0; i < r_; ++i)
        c[static_cast<std::size_t>(i)] = base_->sub(c[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return c;
}

FE ExtFieldCtx::neg(const FE& a) const {
    check_elem(a);
    FE c(a);
    for (auto& v : c) v = base_->neg(v);
    return c;
}

FE ExtFieldCtx::mul(const FE& a, const FE& b) const {
    check_elem(a);
    check_elem(b);
    std::vector<int> tmp(static_cast<std::size_t>(2 * r_ - 1), 0);
    for (int i = 0; i < r_; ++i) {
        int av = a[static_cast<std::size_t>(i)];
        if (av == 0) continue;
        for (int j = 0; j < r_; ++j) {
            auto& slot = tmp[static_cast<std::size_t>(i + j)];
            slot = base_->add(slot, base_->mul(av, b[static_cast<std::size_t>(j)]));
        }
    }
    FE c(tmp.begin(), tmp.begin() + r_);
    for (int i = r_; i < 2 * r_ - 1; ++i) {
        int v = tmp[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        const FE& red = red_[static_cast<std::size_t>(i - r_)];
        for (int j = 0; j < r_; ++j)
            c[static_cast<std::size_t>(j)] = base_->add(c[static_cast<std::size_t>(j)],
                                                        base_->mul(v, red[static_cast<std::size_t>(j)]));
    }
    return c;
}

FE ExtFieldCtx::scale(int c, const FE& a) const {
    check_elem(a);
    FE out(a);
    for (auto& v : out) v = base_->mul(c, v);
    return out;
}

FE ExtFieldCtx::inv(const FE& a) const {
    if (is_zero(a)) throw std::domain_error("ExtFieldCtx: inverse of zero");
    return pow(a, order_ - 2);
}

FE ExtFieldCtx::div(const FE& a, const FE& b) const { return mul(a, inv(b)); }

FE ExtFieldCtx::pow(const FE& a, long long e) const {
    check_elem(a);
    if (is_zero(a)) {
        if (e < 0) throw std::domain_error("ExtFieldCtx: inverse of zero");
        return e == 0 ? one() : zero();
    }
    long long em = e % (order_ - 1);
    if (em < 0) em += order_ - 1;
    FE acc = one();
    FE b = a;
    while (em > 0) {
        if (em & 1) acc = mul(acc, b);
        b = mul(b, b);
        em >>= 1;
    }
    return acc;
}

FE ExtFieldCtx::frobenius(const FE& a, int s) const {
    if (s < 1 || r_ % s != 0)
        throw std::invalid_argument("ExtFieldCtx: Frobenius step must divide the extension degree");
    long long qs = 1;
    for (int i = 0; i < s; ++i) qs *= base_->q();
    return pow(a, qs);
}

FE ExtFieldCtx::trace_to(const FE& a, int s) const {
    if (s < 1 || r_ % s != 0)
        throw std::invalid_argument("ExtFieldCtx: trace level must divide the extension degree");
    FE acc = a;
    FE t = a;
    for (int i = 1; i < r_ / s; ++i) {
        t = frobenius(t, s);
        acc = add(acc, t);
    }
    return acc;
}

int ExtFieldCtx::trace(const FE& a) const {
    check_elem(a);
    int acc = 0;
    for (int j = 0; j < r_; ++j)
        acc = base_->add(acc, base_->mul(a[static_cast<std::size_t>(j)], trace_basis_[static_cast<std::size_t>(j)]));
    return acc;
}

long long ExtFieldCtx::mult_order(const FE& a) const {
    if (is_zero(a)) throw std::domain_error("ExtFieldCtx: order of zero");
    long long ord = order_ - 1;
    for (long long f : prime_factors(order_ - 1)) {
        while (ord % f == 0 && pow(a, ord / f) == one()) ord /= f;
    }
    return ord;
}

long long ExtFieldCtx::label(const FE& a) const {
    check_elem(a);
    long long acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * base_->q() + *it;
    return acc;
}

FE ExtFieldCtx::from_label(long long t) const {
    if (t < 0 || t >= order_) throw std::invalid_argument("ExtFieldCtx: label out of range");
    FE a(static_cast<std::size_t>(r_), 0);
    for (int i = 0; i < r_; ++i) {
        a[static_cast<std::size_t>(i)] = static_cast<int>(t % base_->q());
        t /= base_->q();
    }
    return a;
}

std::string ExtFieldCtx::modulus_str() const {
    std::string out;
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(modulus_[i]);
    }
    return out;
}

}  // namespace fhs
