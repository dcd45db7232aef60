#pragma once

#include <string>
#include <vector>

#include "motive_forge/curve_ring.hpp"
#include "motive_forge/t_rational.hpp"

namespace motive_forge {

struct Cell {
    int i = 1;  // row, 1-based
    int j = 1;  // column, 1-based
    int arm = 0;
    int leg = 0;
    int hook = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
};

class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    Partition conjugate() const;
    // Row-major cells with arm/leg/hook filled in.
    std::vector<Cell> cells() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n, reverse lexicographic: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

int mobius(int j);

// One partition's product over cells; a single denominator factor with c = 1
// appears per arm-0 cell.
template <BaseRing R>
TRational<R> partition_term(const AtomEnvironment<R>& env, const Partition& lambda, int p);

// Sum over partitions of n of partition_term.
template <BaseRing R>
TRational<R> script_h(const AtomEnvironment<R>& env, int n, int p);

// H_1(t) .. H_r(t), index 0 holding H_1.
template <BaseRing R>
std::vector<TRational<R>> plog_h(const AtomEnvironment<R>& env, int r, int p);

// (-1)^{pr} L^{r^2(g-1) + p r(r+1)/2} H_r(1).
template <BaseRing R>
R mozgovoy_class(const AtomEnvironment<R>& env, int g, int r, int p);

#define MOTIVE_FORGE_ADHM_EXTERN(R)                                                        \
    extern template TRational<R> partition_term(const AtomEnvironment<R>&, const Partition&, int); \
    extern template TRational<R> script_h(const AtomEnvironment<R>&, int, int);           \
    extern template std::vector<TRational<R>> plog_h(const AtomEnvironment<R>&, int, int); \
    extern template R mozgovoy_class(const AtomEnvironment<R>&, int, int, int);
MOTIVE_FORGE_ADHM_EXTERN(UVLaurent)
MOTIVE_FORGE_ADHM_EXTERN(BigRational)
#undef MOTIVE_FORGE_ADHM_EXTERN

}  // namespace motive_forge
