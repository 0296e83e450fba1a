// Command-line front end: constructs hopping-sequence families over
// polynomial residue class rings, checks them against the correlation
// bounds, and runs the library's self test battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fhs/numutil.hpp"
#include "fhs/params.hpp"
#include "fhs/quotient_oracle.hpp"
#include "fhs/report.hpp"
#include "fhs/search.hpp"
#include "fhs/selftest.hpp"
#include "fhs/sequence.hpp"

namespace {

long long default_budget() {
    if (const char* env = std::getenv("FHS_BUDGET")) {
        const long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return fhs::kDefaultBudget;
}

void emit_param_error(const fhs::ParamError& err) {
    nlohmann::json j;
    j["error"] = "invalid parameters";
    j["issues"] = err.issues();
    std::cerr << j.dump() << '\n';
}

int write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << '\n';
        return 2;
    }
    out << text;
    return 0;
}

std::string sidecar_path(const std::string& out) {
    if (out.size() > 4 && out.substr(out.size() - 4) == ".csv")
        return out.substr(0, out.size() - 4) + ".params.json";
    return out + ".params.json";
}

struct ParamFlags {
    int p = 0, m = 1, k = 1, r = 1;
    long long z = 1, s = 1;
    std::optional<unsigned long long> gamma;
    std::optional<int> rho;
    long long budget = 0;

    fhs::RawParams raw() const {
        fhs::RawParams w;
        w.p = p;
        w.m = m;
        w.k = k;
        w.r = r;
        w.z = z;
        w.s = s;
        w.gamma_label = gamma;
        w.rho = rho;
        w.budget = budget;
        return w;
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
    cmd->add_option("--p", f.p, "characteristic (prime)")->required();
    cmd->add_option("--m", f.m, "degree of the residue field over GF(p)");
    cmd->add_option("--k", f.k, "nilpotency index of the ring");
    cmd->add_option("--r", f.r, "extension degree of the sequence field");
    cmd->add_option("--z", f.z, "number of sequences (class count)");
    cmd->add_option("--s", f.s, "decimation exponent, coprime to q^r-1");
    cmd->add_option("--gamma", f.gamma, "gamma by mixed-radix label");
    cmd->add_option("--rho", f.rho, "pick the first gamma of this rank (default 1)");
    cmd->add_option("--budget", f.budget, "cap on q^r (default 2^20, env FHS_BUDGET)");
}

int run_report_command(const ParamFlags& flags, const std::string& out, bool profiles, bool gate) {
    fhs::FhsParams P;
    try {
        P = fhs::FhsParams::build(flags.raw());
    } catch (const fhs::ParamError& err) {
        emit_param_error(err);
        return 2;
    }
    const fhs::Family fam = fhs::build_family(P);
    fhs::AnalyzeOptions opts;
    opts.profiles = profiles;
    const fhs::FamilyReport rep = fhs::analyze_family(P, fam, opts);
    const int rc = write_text(out, fhs::report_json(P, rep, profiles).dump(2) + "\n");
    if (rc != 0) return rc;
    if (gate && !rep.all_pass) {
        for (const auto& f : rep.failures) std::cerr << "check failed: " << f << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopping-sequence families from polynomial residue class rings"};
    app.require_subcommand(1);
    const long long budget0 = default_budget();

    // gen: family CSV plus a parameter sidecar.
    auto* gen = app.add_subcommand("gen", "construct a family and write it as CSV");
    ParamFlags gen_flags;
    gen_flags.budget = budget0;
    add_param_flags(gen, gen_flags);
    std::string gen_out;
    gen->add_option("--out", gen_out, "output CSV path (stdout when omitted)");

    // analyze: full report, no gating.
    auto* analyze = app.add_subcommand("analyze", "construct a family and report its statistics");
    ParamFlags ana_flags;
    ana_flags.budget = budget0;
    add_param_flags(analyze, ana_flags);
    std::string ana_out;
    bool ana_profiles = false;
    analyze->add_option("--out", ana_out, "output JSON path (stdout when omitted)");
    analyze->add_flag("--profiles", ana_profiles, "include full correlation profiles");

    // verify: report plus exit gating on the structural checks.
    auto* verify = app.add_subcommand("verify", "construct a family and check it; exit 1 on failure");
    ParamFlags ver_flags;
    ver_flags.budget = budget0;
    add_param_flags(verify, ver_flags);
    std::string ver_out;
    bool ver_profiles = false;
    verify->add_option("--out", ver_out, "output JSON path (stdout when omitted)");
    verify->add_flag("--profiles", ver_profiles, "include full correlation profiles");

    // search: admissible parameter sweep.
    auto* search = app.add_subcommand("search", "enumerate admissible parameter sets");
    fhs::SearchFilter filter;
    filter.budget = budget0;
    int s_p = 0, s_m = 0, s_k = 0, s_r = 0;
    long long s_z = 0;
    search->add_option("--p", s_p, "fix the prime (default: every prime up to 13)");
    search->add_option("--m", s_m, "fix m");
    search->add_option("--k", s_k, "fix k (default: scan 1..3)");
    search->add_option("--r", s_r, "fix r");
    search->add_option("--z", s_z, "fix z");
    search->add_option("--budget", filter.budget, "cap on q^r");
    std::string search_out, search_format = "csv";
    search->add_option("--out", search_out, "output path (stdout when omitted)");
    search->add_option("--format", search_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // selftest: oracles and cross-checks.
    auto* selftest = app.add_subcommand("selftest", "run the oracle battery; exit 1 on failure");
    std::vector<std::string> oracle_specs;
    bool corrupt_mul = false;
    selftest->add_option("--oracle", oracle_specs, "extra representation-oracle instance p,m,k");
    selftest->add_flag("--corrupt-mul", corrupt_mul, "negative control: perturb multiplication")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            fhs::FhsParams P;
            try {
                P = fhs::FhsParams::build(gen_flags.raw());
            } catch (const fhs::ParamError& err) {
                emit_param_error(err);
                return 2;
            }
            const fhs::Family fam = fhs::build_family(P);
            const int rc = write_text(gen_out, fhs::family_csv(fam));
            if (rc != 0) return rc;
            if (!gen_out.empty()) {
                nlohmann::json side;
                side["schema"] = fhs::kReportSchema;
                side["params"] = fhs::params_json(P);
                const auto pred = fhs::predicted_parameters(P);
                side["predicted"] = {{"nu", pred.nu}, {"N", pred.N}, {"l", pred.l}, {"lambda", pred.lambda}};
                return write_text(sidecar_path(gen_out), side.dump(2) + "\n");
            }
            return 0;
        }

        if (analyze->parsed())
            return run_report_command(ana_flags, ana_out, ana_profiles, /*gate=*/false);
        if (verify->parsed())
            return run_report_command(ver_flags, ver_out, ver_profiles, /*gate=*/true);

        if (search->parsed()) {
            if (s_p > 0) filter.p = s_p;
            if (s_m > 0) filter.m = s_m;
            if (s_k > 0) filter.k = s_k;
            if (s_r > 0) filter.r = s_r;
            if (s_z > 0) filter.z = s_z;
            const auto rows = fhs::search_rows(filter);
            if (search_format == "csv") return write_text(search_out, fhs::search_csv(rows));
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& w : rows) {
                arr.push_back({{"p", w.p}, {"m", w.m}, {"k", w.k}, {"r", w.r}, {"z", w.z}, {"s", w.s},
                               {"rho", w.rho}, {"nu", w.nu}, {"N", w.N}, {"l", w.l}, {"lambda", w.lambda}});
            }
            return write_text(search_out, arr.dump(2) + "\n");
        }

        if (selftest->parsed()) {
            std::vector<std::array<int, 3>> extras;
            for (const auto& spec : oracle_specs) {
                std::array<int, 3> inst{0, 0, 0};
                std::stringstream ss(spec);
                std::string tok;
                int idx = 0;
                while (std::getline(ss, tok, ',') && idx < 3) inst[static_cast<std::size_t>(idx++)] = std::stoi(tok);
                if (idx != 3) {
                    std::cerr << "bad --oracle spec (want p,m,k): " << spec << '\n';
                    return 2;
                }
                // Extra instances are table-checked in full, so cap the
                // element count at 256 (65536 table entries).
                if (fhs::ipow_capped(inst[0], inst[1] * inst[2], 256) > 256) {
                    std::cerr << "oracle instance " << spec << " rejected as over budget\n";
                    return 2;
                }
                extras.push_back(inst);
            }
            const auto results = fhs::run_selftest(extras, corrupt_mul);
            bool all = true;
            for (const auto& res : results) {
                std::cout << (res.pass ? "PASS " : "FAIL ") << res.name;
                if (!res.pass && !res.detail.empty()) std::cout << "  [" << res.detail << "]";
                std::cout << '\n';
                all = all && res.pass;
            }
            if (!all) {
                for (const auto& res : results)
                    if (!res.pass) {
                        std::cerr << "selftest failed at " << res.name << ": " << res.detail << '\n';
                        break;
                    }
                return 1;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
