// motive_forge: motives, E-polynomials and Betti numbers of twisted Higgs /
// Lie algebroid connection moduli, and randomized checks of the motivic
// ADHM formula against the closed forms.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "motive_forge/adhm.hpp"
#include "motive_forge/error.hpp"
#include "motive_forge/moduli.hpp"
#include "motive_forge/report_io.hpp"
#include "motive_forge/verify.hpp"

namespace mf = motive_forge;

namespace {

enum Exit { kPass = 0, kIdentityFailure = 1, kInvalidInput = 2, kArithmetic = 3 };

int exit_code_for(mf::ErrorKind kind) {
    switch (kind) {
        case mf::ErrorKind::InvalidGenus:
        case mf::ErrorKind::InvalidSpec:
        case mf::ErrorKind::ParseError:
            return kInvalidInput;
        default:
            return kArithmetic;
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw mf::Error(mf::ErrorKind::ParseError, "cannot open output file '" + out + "'");
    f << text;
}

struct QueryFlags {
    int g = 2;
    int r = 1;
    int d = 1;
    std::optional<int> p;
    std::optional<int> dL;
    std::string realization = "hodge";
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;

    mf::ModuliSpec spec() const {
        mf::ModuliSpec s;
        if (dL) {
            s = {g, r, d, *dL};
        } else {
            s = mf::ModuliSpec::from_p(g, r, d, p.value_or(1));
        }
        s.validate();
        return s;
    }
};

void add_query_flags(CLI::App* cmd, QueryFlags& f, bool with_realization) {
    cmd->add_option("--g", f.g, "genus (>= 2)")->default_val(2);
    cmd->add_option("--r", f.r, "rank (1..3)")->default_val(1);
    cmd->add_option("--d", f.d, "degree, coprime to r")->default_val(1);
    auto* p = cmd->add_option("--p", f.p, "twist parameter, -dL = 2g - 2 + p (default 1)");
    cmd->add_option("--dL", f.dL, "connection twist degree (< 2 - 2g)")->excludes(p);
    if (with_realization) {
        cmd->add_option("--realization", f.realization, "hodge | weil")->default_val("hodge");
        cmd->add_option("--seed", f.seed, "weil environment seed")->default_val(1);
    }
    cmd->add_option("--format", f.format, "json | csv | latex")->default_val("json");
    cmd->add_option("--out", f.out, "output file (default stdout)");
}

int run_motive(const QueryFlags& f) {
    const auto spec = f.spec();
    const auto format = mf::parse_format(f.format);
    mf::QueryOutput q;
    q.command = "motive";
    q.spec = spec;
    if (f.realization == "weil") {
        const auto env = mf::make_weil_env(spec.g, f.seed);
        const auto value = mf::moduli_motive(env, spec);
        q.realization = mf::Realization::weil;
        q.environment = mf::environment_json(env);
        q.legend_latex = mf::latex_legend(env);
        q.value = value.to_string();
        q.value_latex = mf::latex_rational(value);
    } else if (f.realization == "hodge") {
        const auto env = mf::make_hodge_env(spec.g);
        const auto value = mf::moduli_motive(env, spec);
        q.environment = mf::environment_json(env);
        q.legend_latex = mf::latex_legend(env);
        q.value = value.to_string();
        q.value_latex = mf::latex_polynomial(value);
    } else {
        throw mf::Error(mf::ErrorKind::ParseError, "unknown realization '" + f.realization + "' (hodge|weil)");
    }
    emit(mf::render_query(q, format), f.out);
    return kPass;
}

int run_epoly(const QueryFlags& f, bool betti) {
    const auto spec = f.spec();
    const auto format = mf::parse_format(f.format);
    const auto env = mf::make_hodge_env(spec.g);
    const auto e = mf::epoly(spec);
    mf::QueryOutput q;
    q.command = betti ? "betti" : "epoly";
    q.spec = spec;
    q.environment = mf::environment_json(env);
    q.legend_latex = mf::latex_legend(env);
    q.value = e.to_string();
    q.value_latex = mf::latex_polynomial(e);
    if (betti) q.betti = mf::poincare(e);
    emit(mf::render_query(q, format), f.out);
    return kPass;
}

struct VerifyFlags {
    std::string g = "2..3";
    std::string r = "1..3";
    std::string d = "1";
    std::string p;
    std::string dL;
    int trials = mf::kDefaultTrials;
    std::uint64_t seed = 1;
    int hodge_max_g = mf::kDefaultHodgeMaxG;
    int threads = 0;
    std::string format = "json";
    std::string out;
};

int run_verify(const VerifyFlags& f) {
    const auto format = mf::parse_format(f.format);
    if (f.trials < 1) throw mf::Error(mf::ErrorKind::InvalidSpec, "--trials must be >= 1");
    mf::GridOptions o;
    o.genera = mf::parse_int_list(f.g);
    o.ranks = mf::parse_int_list(f.r);
    o.degrees = mf::parse_int_list(f.d);
    o.trials = f.trials;
    o.seed = f.seed;
    o.hodge_max_g = f.hodge_max_g;
    o.threads = f.threads;
    for (int r : o.ranks) {
        if (r < 1 || r > 3) throw mf::Error(mf::ErrorKind::InvalidSpec, "--r values must lie in 1..3");
    }

    std::vector<mf::VerificationReport> reports;
    if (f.dL.empty()) {
        o.ps = mf::parse_int_list(f.p.empty() ? "1" : f.p);
        reports = mf::run_adhm_grid(o);
    } else {
        // dL fixes p per genus, so run one grid per genus.
        const auto dLs = mf::parse_int_list(f.dL);
        for (int g : o.genera) {
            mf::GridOptions og = o;
            og.genera = {g};
            og.ps.clear();
            for (int dL : dLs) og.ps.push_back(-dL - (2 * g - 2));
            const auto part = mf::run_adhm_grid(og);
            reports.insert(reports.end(), part.begin(), part.end());
        }
    }
    if (reports.empty()) throw mf::Error(mf::ErrorKind::InvalidSpec, "grid is empty (no r, d pair is coprime)");

    mf::RunMetadata meta;
    meta.seed = f.seed;
    meta.trials = f.trials;
    meta.hodge_max_g = f.hodge_max_g;
    emit(mf::render_reports(reports, meta, format), f.out);

    for (const auto& r : reports) {
        if (!r.passed()) {
            std::cerr << "identity failure at g=" << r.cell.g << " r=" << r.cell.r << " d=" << r.cell.d << " p=" << r.cell.p
                      << " (hodge " << (r.hodge_run ? (r.hodge_equal ? "equal" : "differ") : "skipped") << ", "
                      << r.weil_failures << '/' << r.weil_trials << " weil failures)\n";
            return kIdentityFailure;
        }
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motives and E-polynomials of rank 1 Lie algebroid connection moduli; motivic ADHM verification"};
    app.require_subcommand(1);

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify-adhm", "compare the ADHM formula with the closed forms over a grid");
    verify->add_option("--g", vf.g, "genera, e.g. 2..3")->default_val("2..3");
    verify->add_option("--r", vf.r, "ranks within 1..3")->default_val("1..3");
    verify->add_option("--d", vf.d, "degrees; cells with gcd(r, d) != 1 are skipped")->default_val("1");
    auto* vp = verify->add_option("--p", vf.p, "twist parameters (default 1)");
    verify->add_option("--dL", vf.dL, "connection twist degrees instead of --p")->excludes(vp);
    verify->add_option("--trials", vf.trials, "weil trials per cell")->default_val(mf::kDefaultTrials);
    verify->add_option("--seed", vf.seed, "base seed")->default_val(1);
    verify->add_option("--hodge-max-g", vf.hodge_max_g, "exact hodge comparison for g up to this")->default_val(mf::kDefaultHodgeMaxG);
    verify->add_option("--threads", vf.threads, "worker threads (default MOTIVE_FORGE_THREADS or all cores)");
    verify->add_option("--format", vf.format, "json | csv | latex")->default_val("json");
    verify->add_option("--out", vf.out, "output file (default stdout)");

    QueryFlags mflags, eflags, bflags;
    auto* motive = app.add_subcommand("motive", "motivic class in a realization");
    add_query_flags(motive, mflags, true);
    auto* epoly = app.add_subcommand("epoly", "E-polynomial");
    add_query_flags(epoly, eflags, false);
    auto* betti = app.add_subcommand("betti", "Betti numbers");
    add_query_flags(betti, bflags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInvalidInput;
    }

    try {
        if (*verify) return run_verify(vf);
        if (*motive) return run_motive(mflags);
        if (*epoly) return run_epoly(eflags, false);
        return run_epoly(bflags, true);
    } catch (const mf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kArithmetic;
    }
}
