#include "motive_forge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "motive_forge/adhm.hpp"
#include "motive_forge/error.hpp"

namespace motive_forge {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int i) noexcept {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i) + 1));
}

namespace {

template <class F>
auto tagged(F&& f, const std::string& where) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), e.detail() + " [" + where + "]");
    }
}

}  // namespace

VerificationReport identity_test(const ClassBuilder& lhs, const ClassBuilder& rhs, int g, int trials,
                                 std::uint64_t seed, int hodge_max_g) {
    if (trials < 1) throw Error(ErrorKind::InvalidSpec, "identity_test needs trials >= 1");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.seed = seed;
    report.weil_trials = trials;

    for (int i = 0; i < trials; ++i) {
        const std::uint64_t s = trial_seed(seed, i);
        const std::string where = "weil seed " + std::to_string(s);
        const WeilEnvironment env = tagged([&] { return make_weil_env(g, s); }, where);
        const BigRational a = tagged([&] { return lhs.weil(env); }, where);
        const BigRational b = tagged([&] { return rhs.weil(env); }, where);
        if (!(a == b)) {
            ++report.weil_failures;
            if (!report.first_failing_seed) report.first_failing_seed = s;
        }
    }
    if (g <= hodge_max_g) {
        report.hodge_run = true;
        const HodgeEnvironment env = make_hodge_env(g);
        const UVLaurent a = tagged([&] { return lhs.hodge(env); }, "hodge");
        const UVLaurent b = tagged([&] { return rhs.hodge(env); }, "hodge");
        report.hodge_equal = a == b;
    }
    report.wall_time_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

ClassBuilder mozgovoy_builder(int g, int r, int p) {
    return {
        [=](const WeilEnvironment& env) { return mozgovoy_class(env, g, r, p); },
        [=](const HodgeEnvironment& env) { return mozgovoy_class(env, g, r, p); },
    };
}

ClassBuilder motive_builder(const ModuliSpec& spec) {
    spec.validate();
    return {
        [=](const WeilEnvironment& env) { return moduli_motive(env, spec); },
        [=](const HodgeEnvironment& env) { return moduli_motive(env, spec); },
    };
}

std::vector<GridCell> expand_grid(const GridOptions& o) {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    std::vector<GridCell> cells;
    for (int g : sorted(o.genera)) {
        for (int r : sorted(o.ranks)) {
            for (int d : sorted(o.degrees)) {
                if (std::gcd(r, d) != 1) continue;
                for (int p : sorted(o.ps)) cells.push_back({g, r, d, p});
            }
        }
    }
    return cells;
}

std::uint64_t cell_seed(std::uint64_t seed, const GridCell& c) noexcept {
    std::uint64_t h = splitmix64(seed);
    for (int x : {c.g, c.r, c.d, c.p}) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(x)));
    return h;
}

VerificationReport verify_adhm_cell(const GridCell& cell, int trials, std::uint64_t seed, int hodge_max_g) {
    const ModuliSpec spec = cell.spec();
    spec.validate();
    VerificationReport report =
        identity_test(mozgovoy_builder(cell.g, cell.r, cell.p), motive_builder(spec), cell.g, trials, seed, hodge_max_g);
    report.cell = cell;
    return report;
}

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MOTIVE_FORGE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> run_adhm_grid(const GridOptions& options) {
    const std::vector<GridCell> cells = expand_grid(options);
    for (const auto& c : cells) c.spec().validate();
    std::vector<VerificationReport> reports(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                reports[i] = verify_adhm_cell(cells[i], options.trials, cell_seed(options.seed, cells[i]), options.hodge_max_g);
            } catch (const Error& e) {
                const auto& c = cells[i];
                const std::string where = " [cell g=" + std::to_string(c.g) + " r=" + std::to_string(c.r) +
                                          " d=" + std::to_string(c.d) + " p=" + std::to_string(c.p) + "]";
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::make_exception_ptr(Error(e.kind(), e.detail() + where));
                next = cells.size();
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cells.size();
            }
        }
    };
    const int n = std::min<int>(resolve_thread_count(options.threads), static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace motive_forge
