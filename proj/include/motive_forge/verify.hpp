#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "motive_forge/curve_ring.hpp"
#include "motive_forge/moduli.hpp"

namespace motive_forge {

// A class evaluated in each realization.
struct ClassBuilder {
    std::function<BigRational(const WeilEnvironment&)> weil;
    std::function<UVLaurent(const HodgeEnvironment&)> hodge;
};

struct GridCell {
    int g = 2;
    int r = 1;
    int d = 1;
    int p = 1;

    int dL() const noexcept { return -(2 * g - 2 + p); }
    ModuliSpec spec() const { return ModuliSpec::from_p(g, r, d, p); }
};

struct VerificationReport {
    GridCell cell;
    bool hodge_run = false;
    bool hodge_equal = false;
    int weil_trials = 0;
    int weil_failures = 0;
    std::optional<std::uint64_t> first_failing_seed;
    long wall_time_ms = 0;
    std::uint64_t seed = 0;

    bool passed() const noexcept { return weil_failures == 0 && (!hodge_run || hodge_equal); }
};

inline constexpr int kDefaultTrials = 20;
inline constexpr int kDefaultHodgeMaxG = 3;

std::uint64_t splitmix64(std::uint64_t x) noexcept;
// Seed of the i-th weil environment of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int i) noexcept;

// Compares lhs and rhs in `trials` weil environments and, for g <= hodge_max_g,
// exactly in the hodge environment. Builder errors are rethrown with the
// environment that triggered them appended to the message.
VerificationReport identity_test(const ClassBuilder& lhs, const ClassBuilder& rhs, int g, int trials,
                                 std::uint64_t seed, int hodge_max_g = kDefaultHodgeMaxG);

ClassBuilder mozgovoy_builder(int g, int r, int p);
ClassBuilder motive_builder(const ModuliSpec& spec);

struct GridOptions {
    std::vector<int> genera{2};
    std::vector<int> ranks{1};
    std::vector<int> degrees{1};
    std::vector<int> ps{1};
    int trials = kDefaultTrials;
    std::uint64_t seed = 0;
    int hodge_max_g = kDefaultHodgeMaxG;
    int threads = 0;  // 0: MOTIVE_FORGE_THREADS or hardware concurrency
};

// Cells with gcd(r, d) != 1 are dropped; order is g, r, d, p ascending.
std::vector<GridCell> expand_grid(const GridOptions& options);

// Seed of a cell, independent of scheduling.
std::uint64_t cell_seed(std::uint64_t seed, const GridCell& cell) noexcept;

VerificationReport verify_adhm_cell(const GridCell& cell, int trials, std::uint64_t seed, int hodge_max_g);

// Runs every cell on a worker pool; results come back in grid order.
std::vector<VerificationReport> run_adhm_grid(const GridOptions& options);

// --threads, then MOTIVE_FORGE_THREADS, then hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace motive_forge
