#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fhs/ring.hpp"

namespace fhs {

// Construction budgets: size of the top field and the sequence period.
inline constexpr long long kDefaultBudget = 1LL << 20;
inline constexpr long long kMaxPeriod = 1LL << 16;

struct RawParams {
    int p = 0;
    int m = 1;
    int k = 1;
    int r = 1;
    long long z = 1;
    long long s = 1;
    std::optional<unsigned long long> gamma_label;  // whole-element mixed-radix label
    std::optional<int> rho;                         // or: first gamma of this rank
    long long budget = kDefaultBudget;
};

// Carries every violated condition, not just the first.
class ParamError : public std::runtime_error {
public:
    explicit ParamError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

// A validated parameter set with derived quantities and live contexts.
struct FhsParams {
    int p, m, k, r;
    long long z, s;
    long long q;    // p^m
    long long qr;   // q^r
    long long n;    // (q^r - 1) / z
    int rho;        // rank of gamma
    FE alpha;       // generator of the top field's unit group
    FE beta;        // alpha^{z s}
    GrElement gamma;
    std::shared_ptr<const Tower> tower;
    std::shared_ptr<const RingCtx> ring;

    // Throws ParamError listing all violations.
    static FhsParams build(const RawParams& raw);
    // The arithmetic-only part of validation; empty means admissible.
    static std::vector<std::string> check(const RawParams& raw);
};

struct Predicted {
    long long nu, N, l, lambda;
};
Predicted predicted_parameters(const FhsParams& params);

// Elements with leading coordinate 1 and the requested rank, in ascending
// mixed-radix order of the remaining coordinates, at most `limit` of them.
std::vector<GrElement> enumerate_gammas(const RingCtx& ring, int target_rho, std::size_t limit);

}  // namespace fhs
