#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fhs/ext_field.hpp"

namespace fhs {

// Element of the extension ring: k coordinates over GF(q^r), coordinate j
// sitting at the j-th power of the nilpotent generator.
struct GrElement {
    std::vector<FE> comps;
    friend bool operator==(const GrElement&, const GrElement&) = default;
};

// Alphabet symbol: k GF(q) labels.
struct RingSymbol {
    std::vector<int> comps;
    friend bool operator==(const RingSymbol&, const RingSymbol&) = default;
};

// The ring of k-coordinate vectors over GF(q^r) with multiplication given
// by convolution truncated at index k (the k-th power of the generator is
// zero). All operations are pure; contexts are immutable after construction.
class RingCtx {
public:
    RingCtx(std::shared_ptr<const Tower> tower, int k);

    const Tower& tower() const { return *tower_; }
    const FieldCtx& fq() const { return tower_->fq; }
    const ExtFieldCtx& fqr() const { return tower_->fqr; }
    int k() const { return k_; }
    // q^{rk}, saturating at cap + 1.
    long long size_capped(long long cap) const;

    GrElement zero() const;
    GrElement one() const;
    GrElement embed(const FE& a) const;  // into coordinate 0
    GrElement from_comp_labels(const std::vector<long long>& labels) const;

    GrElement add(const GrElement& x, const GrElement& y) const;
    GrElement sub(const GrElement& x, const GrElement& y) const;
    GrElement mul(const GrElement& x, const GrElement& y) const;
    GrElement scale(const GrElement& x, const FE& c) const;  // multiply by an embedded field element
    GrElement frobenius(const GrElement& x, int s) const;    // coordinatewise q^s power

    bool is_zero(const GrElement& x) const;
    bool is_unit(const GrElement& x) const;  // coordinate 0 nonzero
    // Splits a unit as (field part, principal part): x = embed(g) * a with
    // a.comps[0] = 1. Throws std::domain_error on non-units.
    std::pair<FE, GrElement> unit_decompose(const GrElement& x) const;

    // Coordinatewise trace into the subfield GF(q^s); s must divide r.
    GrElement gen_trace(const GrElement& x, int s) const;
    // The s = 1 case, collapsed to base-field labels.
    RingSymbol trace_to_base(const GrElement& x) const;

    // Rank over GF(q) of the r-by-k matrix whose columns are the
    // coordinate vectors of x.
    int rank(const GrElement& x) const;

    // Mixed-radix labels: coordinate j weighs (q^r)^j resp. q^j.
    bool gr_label_fits() const { return gr_label_fits_; }
    unsigned long long gr_label(const GrElement& x) const;
    GrElement gr_from_label(unsigned long long t) const;
    long long sym_label(const RingSymbol& s) const;
    RingSymbol sym_from_label(long long t) const;

    RingSymbol sym_zero() const;
    bool sym_is_zero(const RingSymbol& s) const;
    RingSymbol sym_add(const RingSymbol& a, const RingSymbol& b) const;
    RingSymbol sym_scale(int lambda, const RingSymbol& s) const;
    // Coordinates as base-p digit groups joined by '|'.
    std::string sym_str(const RingSymbol& s) const;

private:
    void check_elem(const GrElement& x) const;
    void check_sym(const RingSymbol& s) const;

    std::shared_ptr<const Tower> tower_;
    int k_;
    bool gr_label_fits_ = true;
    bool sym_label_fits_ = true;
};

// Rank of a list of column vectors over GF(q), by Gaussian elimination.
int column_rank(const FieldCtx& F, std::vector<std::vector<int>> cols);

}  // namespace fhs
