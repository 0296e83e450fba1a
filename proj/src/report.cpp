#include "fhs/report.hpp"

#include <algorithm>

#include "fhs/numutil.hpp"

namespace fhs {

namespace {

void record(FamilyReport& rep, const std::string& key, bool pass, const std::string& what) {
    rep.theorems[key] = pass;
    if (!pass) {
        rep.failures.push_back(key + ": " + what);
        rep.all_pass = false;
    }
}

}  // namespace

FamilyReport analyze_family(const FhsParams& P, const Family& fam, const AnalyzeOptions& opts) {
    const RingCtx& ring = *P.ring;
    FamilyReport rep;
    rep.predicted = predicted_parameters(P);
    rep.stats = family_stats(fam);
    const long long nu = rep.predicted.nu;
    const long long l = rep.predicted.l;
    const long long lambda = rep.predicted.lambda;

    const RingSymbol zero_sym = ring.sym_zero();
    for (const auto& seq : fam.members) {
        rep.zero_counts.push_back(count_symbol(seq, zero_sym));
        const auto image = trace_image(ring, seq);
        rep.image_sizes.push_back(static_cast<long long>(image.size()));
        // The distinct-symbol count can fall one short of l when zero never
        // occurs; the report carries both numbers and this flag.
        if (static_cast<long long>(image.size()) != l) rep.image_matches_l = false;
    }

    // Bounds. The sharp single-sequence bound and the pair bound are always
    // defined; the floor form and the family bound need nu >= 2 (and the
    // latter at least two sequences).
    rep.lg_sharp = lg_sharp_bound(nu, l);
    if (nu >= 2) rep.lg_floor = lg_floor_bound(nu, l);
    rep.lemma3 = pair_bound(nu, l);
    if (P.z >= 2 && nu >= 2 && rep.stats.H_a && rep.stats.H_c)
        rep.peng_fan = peng_fan_bound(nu, P.z, l, *rep.stats.H_a, *rep.stats.H_c);

    std::vector<long long> autos;
    if (nu >= 2)
        for (const auto& seq : fam.members) autos.push_back(auto_max(seq));

    // Pair pass: cross peaks, pair peaks, equivalence witnesses.
    rep.coset = coset_count(P);
    const long long pair_target = ceil_of(rep.lemma3);
    bool pairs_meet_bound = true;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
            PairRecord pr;
            pr.i = i;
            pr.j = j;
            pr.cross = cross_max(fam.members[i], fam.members[j]);
            pr.peak = nu >= 2 ? std::max({autos[i], autos[j], pr.cross}) : -1;
            if (nu >= 2 && pr.peak != pair_target) pairs_meet_bound = false;
            pr.witness = proj_equiv_search(ring, fam.members[i], fam.members[j]);
            pr.witness_valid = pr.witness && witness_holds(ring, fam.members[i], fam.members[j], *pr.witness);
            if (!pr.witness_valid) rep.all_pairs_equivalent = false;
            if (rep.pairs.size() < opts.pair_list_cap) rep.pairs.push_back(pr);
            else rep.pairs_truncated = true;
            if (opts.profiles && rep.cross_profiles.size() < opts.pair_list_cap)
                rep.cross_profiles.push_back(
                    {{i, j}, correlation_profile(fam.members[i], fam.members[j], ProfileKind::Cross)});
        }
    }
    if (opts.profiles)
        for (const auto& seq : fam.members)
            rep.auto_profiles.push_back(correlation_profile(seq, seq, ProfileKind::Auto));

    // Verdicts.
    if (rep.stats.H_a) rep.lg_optimal = (*rep.stats.H_a == rep.lg_sharp);
    if (rep.peng_fan) rep.pf_optimal = rep.peng_fan->minimal;
    if (P.z >= 2 && nu >= 2) rep.lg_pair_optimal = pairs_meet_bound;

    // Structural checks. Applicability mirrors what is measurable: the
    // occurrence counts always are; peak-based checks need nu >= 2 and the
    // family-level ones at least two sequences.
    const long long fiber = ipow_capped(P.q, P.r - P.rho, 1LL << 62);

    if (P.z == 1) {
        bool t2 = true;
        std::string why;
        for (const auto& seq : fam.members) {
            if (count_symbol(seq, zero_sym) != fiber - 1) {
                t2 = false;
                why = "zero occurs " + std::to_string(count_symbol(seq, zero_sym)) + " times, expected " +
                      std::to_string(fiber - 1);
                break;
            }
            for (const auto& sym : trace_image(ring, seq)) {
                if (ring.sym_is_zero(sym)) continue;
                const long long c = count_symbol(seq, sym);
                if (c != fiber) {
                    t2 = false;
                    why = "symbol " + ring.sym_str(sym) + " occurs " + std::to_string(c) +
                          " times, expected " + std::to_string(fiber);
                    break;
                }
            }
            if (!t2) break;
        }
        record(rep, "T2", t2, why);
    }

    record(rep, "T3", rep.coset == 1 && rep.all_pairs_equivalent,
           rep.coset != 1 ? "generator orbit count is " + std::to_string(rep.coset)
                          : "some pair admits no scalar-shift witness");

    {
        bool t4 = true;
        std::string why;
        for (std::size_t i = 0; i < rep.zero_counts.size(); ++i) {
            if (rep.zero_counts[i] != lambda) {
                t4 = false;
                why = "sequence " + std::to_string(i) + " has zero count " +
                      std::to_string(rep.zero_counts[i]) + ", expected " + std::to_string(lambda);
                break;
            }
        }
        record(rep, "T4", t4, why);
    }

    if (nu >= 2) {
        bool t5 = true;
        std::string why;
        for (std::size_t i = 0; i < autos.size(); ++i) {
            if (autos[i] != rep.lg_sharp) {
                t5 = false;
                why = "sequence " + std::to_string(i) + " has auto peak " + std::to_string(autos[i]) +
                      ", bound " + std::to_string(rep.lg_sharp);
                break;
            }
        }
        record(rep, "T5", t5, why);
    }

    if (P.z >= 2 && nu >= 2) {
        record(rep, "T6", pairs_meet_bound,
               "some pair peak differs from the pair bound " + std::to_string(pair_target));
        const bool stats_match = rep.stats.H_a && rep.stats.H_c && *rep.stats.H_a == lambda &&
                                 *rep.stats.H_c == lambda;
        const bool pf = rep.peng_fan && rep.peng_fan->holds && rep.peng_fan->minimal &&
                        rep.peng_fan->lhs == rep.peng_fan->rhs;
        record(rep, "T7", stats_match && pf,
               !stats_match ? "measured peaks differ from (q^(r-rho)-1)/z"
                            : "family bound not met with equality");
    }

    return rep;
}

nlohmann::json params_json(const FhsParams& P) {
    nlohmann::json g;
    g["comps"] = nlohmann::json::array();
    for (const auto& comp : P.gamma.comps) g["comps"].push_back(P.tower->fqr.label(comp));
    if (P.ring->gr_label_fits()) g["label"] = P.ring->gr_label(P.gamma);
    else g["label"] = nullptr;

    return nlohmann::json{
        {"p", P.p},
        {"m", P.m},
        {"k", P.k},
        {"r", P.r},
        {"z", P.z},
        {"s", P.s},
        {"q", P.q},
        {"q_r", P.qr},
        {"n", P.n},
        {"rho", P.rho},
        {"omega", P.tower->fq.modulus().str()},
        {"f", P.tower->fqr.modulus_str()},
        {"alpha", P.tower->fqr.label(P.alpha)},
        {"beta", P.tower->fqr.label(P.beta)},
        {"gamma", g},
    };
}

nlohmann::json report_json(const FhsParams& P, const FamilyReport& rep, bool include_profiles) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["params"] = params_json(P);
    j["predicted"] = {{"nu", rep.predicted.nu},
                      {"N", rep.predicted.N},
                      {"l", rep.predicted.l},
                      {"lambda", rep.predicted.lambda}};

    nlohmann::json measured;
    measured["H_a"] = rep.stats.H_a ? nlohmann::json(*rep.stats.H_a) : nlohmann::json(nullptr);
    measured["H_c"] = rep.stats.H_c ? nlohmann::json(*rep.stats.H_c) : nlohmann::json(nullptr);
    measured["M"] = rep.stats.M ? nlohmann::json(*rep.stats.M) : nlohmann::json(nullptr);
    measured["trace_image_sizes"] = rep.image_sizes;
    measured["trace_image_matches_l"] = rep.image_matches_l;
    j["measured"] = measured;

    j["zero_counts"] = rep.zero_counts;

    nlohmann::json bounds;
    bounds["lemma1"] = rep.lg_floor ? nlohmann::json(*rep.lg_floor) : nlohmann::json(nullptr);
    bounds["corollary1"] = rep.lg_sharp;
    if (rep.peng_fan) {
        bounds["peng_fan"] = {{"I", rep.peng_fan->I},
                              {"lhs", rep.peng_fan->lhs},
                              {"rhs", rep.peng_fan->rhs},
                              {"holds", rep.peng_fan->holds},
                              {"minimal", rep.peng_fan->minimal}};
    } else {
        bounds["peng_fan"] = nullptr;
    }
    bounds["lemma3"] = {{"num", rep.lemma3.num}, {"den", rep.lemma3.den}};
    nlohmann::json verdicts;
    verdicts["lg_optimal"] = rep.lg_optimal ? nlohmann::json(*rep.lg_optimal) : nlohmann::json(nullptr);
    verdicts["pf_optimal"] = rep.pf_optimal ? nlohmann::json(*rep.pf_optimal) : nlohmann::json(nullptr);
    verdicts["lg_pair_optimal"] =
        rep.lg_pair_optimal ? nlohmann::json(*rep.lg_pair_optimal) : nlohmann::json(nullptr);
    bounds["verdicts"] = verdicts;
    j["bounds"] = bounds;

    nlohmann::json equiv;
    equiv["coset_count"] = rep.coset;
    equiv["all_pairs_equivalent"] = rep.all_pairs_equivalent;
    equiv["truncated"] = rep.pairs_truncated;
    equiv["pairs"] = nlohmann::json::array();
    for (const auto& pr : rep.pairs) {
        nlohmann::json e{{"i", pr.i}, {"j", pr.j}, {"cross", pr.cross}};
        if (pr.witness) {
            e["lambda"] = pr.witness->lambda;
            e["t"] = pr.witness->shift;
        } else {
            e["lambda"] = nullptr;
            e["t"] = nullptr;
        }
        equiv["pairs"].push_back(e);
    }
    j["equivalence"] = equiv;

    nlohmann::json thm;
    for (const auto& [key, pass] : rep.theorems) thm[key] = pass;
    j["theorems"] = thm;

    if (include_profiles) {
        nlohmann::json profs;
        profs["auto"] = nlohmann::json::array();
        for (const auto& p : rep.auto_profiles) profs["auto"].push_back(p.values);
        profs["cross"] = nlohmann::json::array();
        for (const auto& [ij, p] : rep.cross_profiles)
            profs["cross"].push_back({{"i", ij.first}, {"j", ij.second}, {"values", p.values}});
        j["profiles"] = profs;
    }
    return j;
}

}  // namespace fhs
