#include "fhs/ring.hpp"

#include <stdexcept>

namespace fhs {

RingCtx::RingCtx(std::shared_ptr<const Tower> tower, int k) : tower_(std::move(tower)), k_(k) {
    if (!tower_) throw std::invalid_argument("RingCtx: null tower");
    if (k < 1) throw std::invalid_argument("RingCtx: nilpotency index must be positive");
    const unsigned long long cap = 1ULL << 62;
    unsigned long long acc = 1;
    for (int j = 0; j < k_; ++j) {
        if (acc > cap / static_cast<unsigned long long>(fqr().order())) { gr_label_fits_ = false; break; }
        acc *= static_cast<unsigned long long>(fqr().order());
    }
    acc = 1;
    for (int j = 0; j < k_; ++j) {
        if (acc > cap / static_cast<unsigned long long>(fq().q())) { sym_label_fits_ = false; break; }
        acc *= static_cast<unsigned long long>(fq().q());
    }
}

long long RingCtx::size_capped(long long cap) const {
    long long acc = 1;
    for (int j = 0; j < k_; ++j) {
        if (acc > cap / fqr().order()) return cap + 1;
        acc *= fqr().order();
        if (acc > cap) return cap + 1;
    }
    return acc;
}

void RingCtx::check_elem(const GrElement& x) const {
    if (static_cast<int>(x.comps.size()) != k_)
        throw std::invalid_argument("RingCtx: element has wrong coordinate count");
}

void RingCtx::check_sym(const RingSymbol& s) const {
    if (static_cast<int>(s.comps.size()) != k_)
        throw std::invalid_argument("RingCtx: symbol has wrong coordinate count");
}

GrElement RingCtx::zero() const {
    GrElement x;
    x.comps.assign(static_cast<std::size_t>(k_), fqr().zero());
    return x;
}

GrElement RingCtx::one() const {
    GrElement x = zero();
    x.comps[0] = fqr().one();
    return x;
}

GrElement RingCtx::embed(const FE& a) const {
    GrElement x = zero();
    x.comps[0] = a;
    return x;
}

GrElement RingCtx::from_comp_labels(const std::vector<long long>& labels) const {
    if (static_cast<int>(labels.size()) != k_)
        throw std::invalid_argument("RingCtx: wrong number of coordinate labels");
    GrElement x = zero();
    for (int j = 0; j < k_; ++j) x.comps[static_cast<std::size_t>(j)] = fqr().from_label(labels[static_cast<std::size_t>(j)]);
    return x;
}

GrElement RingCtx::add(const GrElement& x, const GrElement& y) const {
    check_elem(x);
    check_elem(y);
    GrElement z = x;
    for (int j = 0; j < k_; ++j)
        z.comps[static_cast<std::size_t>(j)] = fqr().add(z.comps[static_cast<std::size_t>(j)], y.comps[static_cast<std::size_t>(j)]);
    return z;
}

GrElement RingCtx::sub(const GrElement& x, const GrElement& y) const {
    check_elem(x);
    check_elem(y);
    GrElement z = x;
    for (int j = 0; j < k_; ++j)
        z.comps[static_cast<std::size_t>(j)] = fqr().sub(z.comps[static_cast<std::size_t>(j)], y.comps[static_cast<std::size_t>(j)]);
    return z;
}

GrElement RingCtx::mul(const GrElement& x, const GrElement& y) const {
    check_elem(x);
    check_elem(y);
    GrElement z = zero();
    for (int i = 0; i < k_; ++i) {
        if (fqr().is_zero(x.comps[static_cast<std::size_t>(i)])) continue;
        for (int j = 0; j + i < k_; ++j) {
            auto& slot = z.comps[static_cast<std::size_t>(i + j)];
            slot = fqr().add(slot, fqr().mul(x.comps[static_cast<std::size_t>(i)], y.comps[static_cast<std::size_t>(j)]));
        }
    }
    return z;
}

GrElement RingCtx::scale(const GrElement& x, const FE& c) const {
    check_elem(x);
    GrElement z = x;
    for (auto& comp : z.comps) comp = fqr().mul(comp, c);
    return z;
}

GrElement RingCtx::frobenius(const GrElement& x, int s) const {
    check_elem(x);
    GrElement z = x;
    for (auto& comp : z.comps) comp = fqr().frobenius(comp, s);
    return z;
}

bool RingCtx::is_zero(const GrElement& x) const {
    check_elem(x);
    for (const auto& comp : x.comps)
        if (!fqr().is_zero(comp)) return false;
    return true;
}

bool RingCtx::is_unit(const GrElement& x) const {
    check_elem(x);
    return !fqr().is_zero(x.comps[0]);
}

std::pair<FE, GrElement> RingCtx::unit_decompose(const GrElement& x) const {
    if (!is_unit(x)) throw std::domain_error("RingCtx: element is not a unit");
    FE g = x.comps[0];
    FE ginv = fqr().inv(g);
    GrElement a = scale(x, ginv);
    return {std::move(g), std::move(a)};
}

GrElement RingCtx::gen_trace(const GrElement& x, int s) const {
    check_elem(x);
    GrElement z = x;
    for (auto& comp : z.comps) comp = fqr().trace_to(comp, s);
    return z;
}

RingSymbol RingCtx::trace_to_base(const GrElement& x) const {
    check_elem(x);
    RingSymbol s;
    s.comps.resize(static_cast<std::size_t>(k_), 0);
    for (int j = 0; j < k_; ++j) s.comps[static_cast<std::size_t>(j)] = fqr().trace(x.comps[static_cast<std::size_t>(j)]);
    return s;
}

int RingCtx::rank(const GrElement& x) const {
    check_elem(x);
    std::vector<std::vector<int>> cols(x.comps.begin(), x.comps.end());
    return column_rank(fq(), std::move(cols));
}

unsigned long long RingCtx::gr_label(const GrElement& x) const {
    check_elem(x);
    if (!gr_label_fits_) throw std::domain_error("RingCtx: element label space exceeds 64 bits");
    unsigned long long acc = 0;
    for (auto it = x.comps.rbegin(); it != x.comps.rend(); ++it)
        acc = acc * static_cast<unsigned long long>(fqr().order()) + static_cast<unsigned long long>(fqr().label(*it));
    return acc;
}

GrElement RingCtx::gr_from_label(unsigned long long t) const {
    if (!gr_label_fits_) throw std::domain_error("RingCtx: element label space exceeds 64 bits");
    GrElement x = zero();
    const auto ord = static_cast<unsigned long long>(fqr().order());
    for (int j = 0; j < k_; ++j) {
        x.comps[static_cast<std::size_t>(j)] = fqr().from_label(static_cast<long long>(t % ord));
        t /= ord;
    }
    if (t != 0) throw std::invalid_argument("RingCtx: element label out of range");
    return x;
}

long long RingCtx::sym_label(const RingSymbol& s) const {
    check_sym(s);
    if (!sym_label_fits_) throw std::domain_error("RingCtx: symbol label space exceeds 64 bits");
    long long acc = 0;
    for (auto it = s.comps.rbegin(); it != s.comps.rend(); ++it) acc = acc * fq().q() + *it;
    return acc;
}

RingSymbol RingCtx::sym_from_label(long long t) const {
    if (t < 0) throw std::invalid_argument("RingCtx: negative symbol label");
    RingSymbol s;
    s.comps.resize(static_cast<std::size_t>(k_), 0);
    for (int j = 0; j < k_; ++j) {
        s.comps[static_cast<std::size_t>(j)] = static_cast<int>(t % fq().q());
        t /= fq().q();
    }
    if (t != 0) throw std::invalid_argument("RingCtx: symbol label out of range");
    return s;
}

RingSymbol RingCtx::sym_zero() const {
    RingSymbol s;
    s.comps.resize(static_cast<std::size_t>(k_), 0);
    return s;
}

bool RingCtx::sym_is_zero(const RingSymbol& s) const {
    check_sym(s);
    for (int v : s.comps)
        if (v != 0) return false;
    return true;
}

RingSymbol RingCtx::sym_add(const RingSymbol& a, const RingSymbol& b) const {
    check_sym(a);
    check_sym(b);
    RingSymbol s = a;
    for (int j = 0; j < k_; ++j) s.comps[static_cast<std::size_t>(j)] = fq().add(s.comps[static_cast<std::size_t>(j)], b.comps[static_cast<std::size_t>(j)]);
    return s;
}

RingSymbol RingCtx::sym_scale(int lambda, const RingSymbol& s) const {
    check_sym(s);
    RingSymbol out = s;
    for (auto& v : out.comps) v = fq().mul(lambda, v);
    return out;
}

std::string RingCtx::sym_str(const RingSymbol& s) const {
    check_sym(s);
    std::string out;
    for (int j = 0; j < k_; ++j) {
        if (j) out += '|';
        out += fq().elem_str(s.comps[static_cast<std::size_t>(j)]);
    }
    return out;
}

int column_rank(const FieldCtx& F, std::vector<std::vector<int>> cols) {
    if (cols.empty()) return 0;
    const std::size_t rows = cols[0].size();
    for (const auto& c : cols)
        if (c.size() != rows) throw std::invalid_argument("column_rank: ragged columns");

    // Greedy basis: reduce each column against the pivots collected so far
    // and keep it when a nonzero entry survives. Pivot entries are
    // normalized to 1, so elimination is a single multiply per row.
    std::vector<std::vector<int>> basis;
    std::vector<std::size_t> pivot_row;
    for (auto& v : cols) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int f = v[pivot_row[b]];
            if (f == 0) continue;
            for (std::size_t i = 0; i < rows; ++i)
                v[i] = F.sub(v[i], F.mul(f, basis[b][i]));
        }
        std::size_t lead = rows;
        for (std::size_t i = 0; i < rows; ++i)
            if (v[i] != 0) { lead = i; break; }
        if (lead == rows) continue;
        const int inv = F.inv(v[lead]);
        for (std::size_t i = 0; i < rows; ++i) v[i] = F.mul(inv, v[i]);
        basis.push_back(v);
        pivot_row.push_back(lead);
    }
    return static_cast<int>(basis.size());
}

}  // namespace fhs
