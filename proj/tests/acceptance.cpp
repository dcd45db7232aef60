// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "motive_forge/adhm.hpp"
#include "motive_forge/error.hpp"
#include "motive_forge/moduli.hpp"
#include "motive_forge/verify.hpp"
#include "support.hpp"

using namespace motive_forge;

namespace {

constexpr std::uint64_t kSeed = 20261015;
constexpr int kTrials = 20;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string cell_name(int g, int r, int d, int p) {
    std::ostringstream os;
    os << "g=" << g << " r=" << r << " d=" << d << " p=" << p;
    return os.str();
}

const UVLaurent u = UVLaurent::u();
const UVLaurent v = UVLaurent::v();
const UVLaurent one(1);

// Jac and L^k computed straight from the atoms.
BigRational weil_jacobian(const WeilEnvironment& w) {
    BigRational prod(1);
    for (const auto& b : w.betas) prod *= BigRational(1) + b;
    return prod;
}

struct GridEntry {
    int g, r, d, p;
};

std::vector<GridEntry> adhm_grid() {
    std::vector<GridEntry> out;
    for (int g : {2, 3}) {
        for (int r = 1; r <= 3; ++r) {
            for (int p : {1, 2}) {
                out.push_back({g, r, 1, p});
                if (r == 3) out.push_back({g, r, 2, p});
            }
        }
    }
    return out;
}

Outcome adhm_reproduction() {
    Outcome o;
    GridOptions opts;
    opts.genera = {2, 3};
    opts.ps = {1, 2};
    opts.trials = kTrials;
    opts.seed = kSeed;
    opts.hodge_max_g = 3;
    opts.ranks = {1, 2, 3};
    opts.degrees = {1};
    auto reports = run_adhm_grid(opts);
    opts.ranks = {3};
    opts.degrees = {2};
    const auto extra = run_adhm_grid(opts);
    reports.insert(reports.end(), extra.begin(), extra.end());
    int weil_runs = 0;
    for (const auto& r : reports) {
        weil_runs += r.weil_trials;
        if (!r.hodge_run) o.fail("hodge comparison skipped at " + cell_name(r.cell.g, r.cell.r, r.cell.d, r.cell.p));
        if (!r.passed()) {
            o.fail(cell_name(r.cell.g, r.cell.r, r.cell.d, r.cell.p) + ": " + std::to_string(r.weil_failures) +
                   " weil failures, hodge " + (r.hodge_equal ? "equal" : "differ"));
        }
    }
    if (o.ok) {
        o.detail = std::to_string(reports.size()) + " cells, hodge exact, " + std::to_string(weil_runs) +
                   " weil trials, 0 failures";
    }
    return o;
}

Outcome rank_one_closed_form() {
    Outcome o;
    int checks = 0;
    for (int g = 2; g <= 4; ++g) {
        const auto h = make_hodge_env(g);
        for (int p = 1; p <= 4; ++p) {
            const UVLaurent expected = pow(u * v, g - 1 + p) * pow(one - u, g) * pow(one - v, g);
            if (!(mozgovoy_class(h, g, 1, p) == expected)) o.fail("hodge " + cell_name(g, 1, 1, p));
            ++checks;
            for (int i = 0; i < 5; ++i) {
                const auto w = make_weil_env(g, trial_seed(kSeed + static_cast<std::uint64_t>(10 * g + p), i));
                if (!(mozgovoy_class(w, g, 1, p) == pow(w.lefschetz, g - 1 + p) * weil_jacobian(w))) {
                    o.fail("weil " + cell_name(g, 1, 1, p));
                }
                ++checks;
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " evaluations, g 2..4, p 1..4";
    return o;
}

Outcome epoly_consistency() {
    Outcome o;
    int checks = 0;
    for (int g : {2, 3}) {
        const auto h = make_hodge_env(g);
        for (int p : {1, 2}) {
            const auto s2 = ModuliSpec::from_p(g, 2, 1, p);
            if (!(motive_rank2(h, s2) == epoly_rank2(s2))) o.fail(cell_name(g, 2, 1, p));
            for (int d : {1, 2}) {
                const auto s3 = ModuliSpec::from_p(g, 3, d, p);
                if (!(motive_rank3(h, s3) == epoly_rank3(s3))) o.fail(cell_name(g, 3, d, p));
                ++checks;
            }
            ++checks;
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " exact comparisons";
    return o;
}

Outcome degree_and_purity() {
    Outcome o;
    int checks = 0;
    for (int g : {2, 3}) {
        for (int p : {1, 2}) {
            for (int r = 1; r <= 3; ++r) {
                const auto s = ModuliSpec::from_p(g, r, 1, p);
                const int dim = 1 - r * r * s.dL;
                const UVLaurent e = epoly(s);
                if (e.total_degree() != 2 * dim) o.fail("degree at " + cell_name(g, r, 1, p));
                if (!e.coefficient(dim, dim).is_one()) o.fail("leading coefficient at " + cell_name(g, r, 1, p));
                try {
                    const auto b = poincare(e);
                    if (b.front() != 1) o.fail("b0 at " + cell_name(g, r, 1, p));
                    if (r == 2 && g == 2 && (b.size() < 2 || b[1] != 2 * g)) o.fail("b1 at " + cell_name(g, r, 1, p));
                } catch (const Error& err) {
                    o.fail(cell_name(g, r, 1, p) + ": " + err.what());
                }
                ++checks;
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checks) + " E-polynomials; b1 = 4 at g=2, r=2";
    return o;
}

Outcome degree_independence() {
    Outcome o;
    for (int g : {2, 3}) {
        for (int p : {1, 2}) {
            if (!(epoly_rank2(ModuliSpec::from_p(g, 2, 1, p)) == epoly_rank2(ModuliSpec::from_p(g, 2, 3, p)))) {
                o.fail("rank 2 at g=" + std::to_string(g) + " p=" + std::to_string(p));
            }
            if (!(epoly_rank3(ModuliSpec::from_p(g, 3, 1, p)) == epoly_rank3(ModuliSpec::from_p(g, 3, 2, p)))) {
                o.fail("rank 3 at g=" + std::to_string(g) + " p=" + std::to_string(p));
            }
        }
    }
    if (o.ok) o.detail = "rank 2 d=1 vs 3, rank 3 d=1 vs 2, g 2..3, p 1..2";
    return o;
}

Outcome duality() {
    Outcome o;
    int trials = 0;
    for (int g : {2, 3}) {
        for (int p : {1, 2}) {
            const auto r = identity_test(motive_builder(ModuliSpec::from_p(g, 3, 1, p)),
                                         motive_builder(ModuliSpec::from_p(g, 3, -1, p)), g, kTrials, kSeed + 6, 0);
            trials += r.weil_trials;
            if (!r.passed()) o.fail(std::to_string(r.weil_failures) + " failures at g=" + std::to_string(g) + " p=" + std::to_string(p));
        }
    }
    if (o.ok) o.detail = std::to_string(trials) + " weil trials, 0 failures";
    return o;
}

// Random polynomial in the atoms and L, as (coefficient, atom indices) with -1 for L.
struct AtomExpr {
    std::vector<std::pair<BigRational, std::vector<int>>> terms;

    template <BaseRing R>
    R operator()(const AtomEnvironment<R>& env) const {
        R total{};
        for (const auto& [c, idx] : terms) {
            R term(c);
            for (int i : idx) term = term * (i < 0 ? env.lefschetz : env.betas[static_cast<std::size_t>(i)]);
            total = total + term;
        }
        return total;
    }
};

AtomExpr random_expr(testing_support::Gen& gen, int g) {
    AtomExpr e;
    for (int k = gen.integer(1, 4); k > 0; --k) {
        std::vector<int> idx;
        for (int m = gen.integer(0, 3); m > 0; --m) idx.push_back(gen.integer(-1, 2 * g - 1));
        e.terms.push_back({gen.rational(), idx});
    }
    return e;
}

template <BaseRing R>
SplitClass<R> random_split(testing_support::Gen& gen, const AtomEnvironment<R>& env) {
    SplitClass<R> c;
    for (int n = gen.integer(1, 4); n > 0; --n) {
        R value = pow(env.lefschetz, gen.integer(0, 2));
        if (gen.integer(0, 1)) value = value * env.betas[static_cast<std::size_t>(gen.integer(0, 2 * env.genus - 1))];
        c.add(value, gen.integer(0, 1) ? AtomKind::geometric : AtomKind::finite);
    }
    return c;
}

Outcome property_suites() {
    Outcome o;
    testing_support::Gen gen(kSeed);
    std::map<std::string, int> counts;

    for (int trial = 0; trial < 40; ++trial) {
        const int g = gen.integer(2, 4);
        const int m = gen.integer(1, 3), n = gen.integer(1, 3);
        const AtomExpr f = random_expr(gen, g);
        const auto w = make_weil_env(g, trial_seed(kSeed, trial));
        if (!(f(frobenius(frobenius(w, m), n)) == f(frobenius(w, m * n)))) o.fail("psi composition (weil)");
        const auto h = make_hodge_env(g);
        if (!(f(frobenius(frobenius(h, m), n)) == f(frobenius(h, m * n)))) o.fail("psi composition (hodge)");
        ++counts["psi"];
    }

    for (int trial = 0; trial < 40; ++trial) {
        const auto w = make_weil_env(2 + trial % 2, trial_seed(kSeed + 1, trial));
        const auto a = random_split(gen, w), b = random_split(gen, w);
        if (!(lambda_series(a + b, 6) == lambda_series(a, 6) * lambda_series(b, 6))) o.fail("lambda convolution (weil)");
        const auto h = make_hodge_env(2 + trial % 2);
        const auto c = random_split(gen, h), d = random_split(gen, h);
        if (!(lambda_series(c + d, 5) == lambda_series(c, 5) * lambda_series(d, 5))) o.fail("lambda convolution (hodge)");
        ++counts["lambda"];
    }

    auto functional = [&](const auto& env) {
        const auto e = elementary_symmetric(env);
        const int g = env.genus;
        for (int k = 0; k <= 2 * g; ++k) {
            if (!(e[static_cast<std::size_t>(k)] == pow(env.lefschetz, k - g) * e[static_cast<std::size_t>(2 * g - k)])) {
                o.fail("functional equation at g=" + std::to_string(g));
            }
        }
        ++counts["functional"];
    };
    auto newton = [&](const auto& env) {
        using R = std::decay_t<decltype(env.lefschetz)>;
        const int top = 2 * env.genus;
        const auto e = elementary_symmetric(env);
        const auto ps = power_sums(env, top);
        for (int k = 1; k <= top; ++k) {
            R rhs{};
            for (int i = 1; i <= k; ++i) {
                const R term = e[static_cast<std::size_t>(k - i)] * ps[static_cast<std::size_t>(i)];
                rhs = i % 2 ? rhs + term : rhs - term;
            }
            if (!(e[static_cast<std::size_t>(k)] * BigRational(k) == rhs)) o.fail("Newton identity at k=" + std::to_string(k));
        }
        ++counts["newton"];
    };
    for (int g = 2; g <= 4; ++g) {
        functional(make_hodge_env(g));
        newton(make_hodge_env(g));
        for (int i = 0; i < 10; ++i) {
            const auto w = make_weil_env(g, trial_seed(kSeed + 2, 10 * g + i));
            functional(w);
            newton(w);
        }
    }

    auto sym = [&](const auto& env, int n) {
        using R = std::decay_t<decltype(env.lefschetz)>;
        const R& L = env.lefschetz;
        // Sym^n X is a P^{n-g} bundle over Jac for n >= 2g - 1
        const R lhs = sym_power_class(curve_class(env), n) * (L - R(1));
        const R rhs = [&] {
            if constexpr (std::is_same_v<R, BigRational>) {
                return weil_jacobian(env) * (pow(L, n - env.genus + 1) - R(1));
            } else {
                return pow(one - u, env.genus) * pow(one - v, env.genus) * (pow(L, n - env.genus + 1) - R(1));
            }
        }();
        if (!(lhs == rhs)) o.fail("Sym^" + std::to_string(n) + " bundle identity");
        ++counts["sym"];
    };
    for (int n = 3; n <= 9; ++n) {
        sym(make_hodge_env(2), n);
        for (int i = 0; i < 5; ++i) sym(make_weil_env(2, trial_seed(kSeed + 3, 10 * n + i)), n);
    }

    if (o.ok) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : counts) {
            os << (first ? "" : ", ") << k << " " << c;
            first = false;
        }
        o.detail = os.str();
    }
    return o;
}

Outcome polynomiality() {
    Outcome o;
    int evaluations = 0;
    auto check = [&](const auto& env, const GridEntry& c) {
        for (const auto& H : plog_h(env, c.r, c.p)) {
            try {
                (void)H.eval_at_one();
                ++evaluations;
            } catch (const Error& e) {
                o.fail(cell_name(c.g, c.r, c.d, c.p) + ": " + e.what());
            }
        }
    };
    std::set<std::pair<int, int>> seen;
    for (const auto& c : adhm_grid()) {
        // H_n depends on (g, r, p) only
        if (!seen.insert({c.g * 100 + c.r, c.p}).second) continue;
        check(make_hodge_env(c.g), c);
        for (int i = 0; i < kTrials; ++i) check(make_weil_env(c.g, trial_seed(kSeed + 8, i)), c);
    }
    if (o.ok) o.detail = std::to_string(evaluations) + " evaluations at t = 1, no pole";
    return o;
}

Outcome bb_exponents() {
    Outcome o;
    std::set<std::string> shapes;
    int checks = 0;
    for (const auto& c : adhm_grid()) {
        const auto s = ModuliSpec::from_p(c.g, c.r, c.d, c.p);
        const int g = s.g, dL = s.dL;
        for (const auto& t : strata(s)) {
            const std::string shape = t.type.shape();
            int literal = 0;
            if (shape == "(1)") {
                literal = -dL + 1 - g;
            } else if (shape == "(2)") {
                literal = -4 * dL + 4 - 4 * g;
            } else if (shape == "(1,1)") {
                literal = -3 * dL + 2 - 2 * g;
            } else if (shape == "(3)") {
                literal = -9 * dL + 9 - 9 * g;
            } else if (shape == "(1,2)" || shape == "(2,1)") {
                literal = -7 * dL + 5 - 5 * g;
            } else if (shape == "(1,1,1)") {
                literal = -6 * dL + 3 - 3 * g;
            } else {
                o.fail("unexpected stratum " + shape);
                continue;
            }
            if (bb_exponent(t.type, s) != literal) {
                o.fail(shape + " at " + cell_name(c.g, c.r, c.d, c.p) + ": " + std::to_string(bb_exponent(t.type, s)) +
                       " vs " + std::to_string(literal));
            }
            if (shape != "(1)") shapes.insert(shape);
            ++checks;
        }
    }
    if (shapes.size() != 6) o.fail("only " + std::to_string(shapes.size()) + " of the six stratum types occurred");
    if (o.ok) o.detail = std::to_string(checks) + " strata over all six types";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"ADHM grid reproduction", adhm_reproduction},
        {"rank-1 closed form", rank_one_closed_form},
        {"E-polynomial consistency", epoly_consistency},
        {"degree and purity", degree_and_purity},
        {"d-independence", degree_independence},
        {"duality d <-> -d", duality},
        {"property suites", property_suites},
        {"polynomiality of H_r", polynomiality},
        {"BB exponents", bb_exponents},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.ok;
        std::printf("criterion %zu %-26s %s  (%s; %.2fs)\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
