#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motive_forge/curve_ring.hpp"

namespace motive_forge {

// A moduli query: rank r, degree d, connection twist degree dL (< 2 - 2g).
// The Higgs-side twist has degree -dL = 2g - 2 + p.
struct ModuliSpec {
    int g = 2;
    int r = 1;
    int d = 1;
    int dL = -3;

    static ModuliSpec from_p(int g, int r, int d, int p) { return {g, r, d, -(2 * g - 2 + p)}; }
    int p() const noexcept { return -dL - (2 * g - 2); }

    // Empty when valid, otherwise the reason.
    std::string invalid_reason() const;
    void validate() const;  // throws InvalidGenus / InvalidSpec

    friend bool operator==(const ModuliSpec&, const ModuliSpec&) = default;
};

// Chain type of a fixed-point stratum: multirank and multidegree.
struct VHSType {
    std::vector<int> ranks;
    std::vector<int> degrees;

    static VHSType bundle(int r, int d) { return {{r}, {d}}; }
    static VHSType pair(int r1, int r2, int d, int d1) { return {{r1, r2}, {d1, d - d1}}; }
    static VHSType triple(int d, int d1, int d2) { return {{1, 1, 1}, {d1, d2, d - d1 - d2}}; }

    int rank() const;
    int degree() const;
    std::string shape() const;  // "(1,2)" etc.

    friend bool operator==(const VHSType&, const VHSType&) = default;
};

int dimension(const ModuliSpec& spec);

// Stable vector bundles M(r, d) for r <= 3.
template <BaseRing R>
R bundle_moduli_class(const AtomEnvironment<R>& env, int r, int d);

bool stratum_nonempty(const VHSType& t, int dL);

// Class of the fixed-point stratum of the L^{-1}-twisted Higgs moduli.
template <BaseRing R>
R vhs_class(const AtomEnvironment<R>& env, const VHSType& t, int dL);

// Index set of nonempty (1,1,1) strata, from the explicit bounds. Matches the
// inequalities only for 3 not dividing d (the coprime case).
std::vector<std::pair<int, int>> delta_set(int d, int dL);
// Filters the four defining inequalities over a box.
std::vector<std::pair<int, int>> delta_set_bruteforce(int d, int dL);

// Morse index M of a stratum in the Higgs moduli with twist of degree
// twist_deg (> 2g - 2). Callers on the connection side pass -dL.
int morse_index(const VHSType& t, int twist_deg, int g);

int stratum_dimension(const VHSType& t, int dL, int g);

// Bialynicki-Birula exponent N+ of the stratum in the spec's moduli space.
int bb_exponent(const VHSType& t, const ModuliSpec& spec);

// Strata in the order they are summed, each with its exponent.
struct StratumTerm {
    VHSType type;
    int exponent = 0;
};
std::vector<StratumTerm> strata(const ModuliSpec& spec);

template <BaseRing R>
R motive_rank1(const AtomEnvironment<R>& env, const ModuliSpec& spec);
template <BaseRing R>
R motive_rank2(const AtomEnvironment<R>& env, const ModuliSpec& spec);
template <BaseRing R>
R motive_rank3(const AtomEnvironment<R>& env, const ModuliSpec& spec);

// Dispatches on spec.r.
template <BaseRing R>
R moduli_motive(const AtomEnvironment<R>& env, const ModuliSpec& spec);

// Closed-form E-polynomials.
UVLaurent epoly_rank2(const ModuliSpec& spec);
UVLaurent epoly_rank3(const ModuliSpec& spec);
// r = 1 through the motive, r = 2, 3 through the closed forms.
UVLaurent epoly(const ModuliSpec& spec);

// Betti numbers b_0, b_1, ... of a pure variety from its E-polynomial.
std::vector<long> poincare(const UVLaurent& e);

#define MOTIVE_FORGE_MODULI_EXTERN(R)                                                  \
    extern template R bundle_moduli_class(const AtomEnvironment<R>&, int, int);        \
    extern template R vhs_class(const AtomEnvironment<R>&, const VHSType&, int);       \
    extern template R motive_rank1(const AtomEnvironment<R>&, const ModuliSpec&);      \
    extern template R motive_rank2(const AtomEnvironment<R>&, const ModuliSpec&);      \
    extern template R motive_rank3(const AtomEnvironment<R>&, const ModuliSpec&);      \
    extern template R moduli_motive(const AtomEnvironment<R>&, const ModuliSpec&);
MOTIVE_FORGE_MODULI_EXTERN(UVLaurent)
MOTIVE_FORGE_MODULI_EXTERN(BigRational)
#undef MOTIVE_FORGE_MODULI_EXTERN

}  // namespace motive_forge
