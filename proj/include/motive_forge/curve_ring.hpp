#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "motive_forge/big_rational.hpp"
#include "motive_forge/ring.hpp"
#include "motive_forge/truncated_series.hpp"
#include "motive_forge/uv_laurent.hpp"

namespace motive_forge {

enum class Realization { hodge, weil };

std::string_view to_string(Realization r) noexcept;

// The curve's h^1 atoms and the Lefschetz value in a concrete realization.
// betas[i] * betas[genus + i] == lefschetz for every i < genus.
template <BaseRing R>
struct AtomEnvironment {
    int genus = 0;
    R lefschetz;
    std::vector<R> betas;
    Realization base = Realization::hodge;
    std::optional<std::uint64_t> seed;  // weil only
    int frobenius_power = 1;
};

using HodgeEnvironment = AtomEnvironment<UVLaurent>;
using WeilEnvironment = AtomEnvironment<BigRational>;

inline constexpr long kWeilSampleBound = 10000;

HodgeEnvironment make_hodge_env(int genus);
WeilEnvironment make_weil_env(int genus, std::uint64_t seed);

// Adams operator psi_j on the split model: L -> L^j and each h^1 atom
// beta -> -(-beta)^j, i.e. the Frobenius eigenvalue -beta goes to its j-th power.
template <BaseRing R>
AtomEnvironment<R> frobenius(const AtomEnvironment<R>& env, int j);

// sum_i lambda^i(h^1) arg^i = prod_k (1 + beta_k arg).
template <BaseRing R>
R p_X(const AtomEnvironment<R>& env, const R& arg);

template <BaseRing R>
R jacobian_class(const AtomEnvironment<R>& env);

// e_0..e_{2g} of the atoms, i.e. lambda^n(h^1).
template <BaseRing R>
std::vector<R> elementary_symmetric(const AtomEnvironment<R>& env);

// p_1..p_count of the atoms (index 0 holds 2g).
template <BaseRing R>
std::vector<R> power_sums(const AtomEnvironment<R>& env, int count);

enum class AtomKind {
    geometric,  // lambda-series 1/(1 - l x)
    finite,     // lambda-series 1 + l x
};

template <BaseRing R>
struct Atom {
    R value;
    AtomKind kind = AtomKind::geometric;
};

// A sum of line elements; the only inputs lambda-operations accept.
template <BaseRing R>
class SplitClass {
public:
    SplitClass() = default;

    SplitClass& add(R value, AtomKind kind);
    SplitClass& add_geometric(R value) { return add(std::move(value), AtomKind::geometric); }
    SplitClass& add_finite(R value) { return add(std::move(value), AtomKind::finite); }

    const std::vector<Atom<R>>& atoms() const noexcept { return atoms_; }

    // Sum of atom values with finite atoms counted positively.
    R value() const;

    // Product with a geometric line element (e.g. [X] * L); kinds are kept.
    SplitClass scaled(const R& line) const;

    friend SplitClass operator+(SplitClass a, const SplitClass& b) {
        a.atoms_.insert(a.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
        return a;
    }

private:
    std::vector<Atom<R>> atoms_;
};

// [X] = 1 + h^1 + L.
template <BaseRing R>
SplitClass<R> curve_class(const AtomEnvironment<R>& env);

// [X] + L^2.
template <BaseRing R>
SplitClass<R> curve_class_plus_lefschetz_squared(const AtomEnvironment<R>& env);

// [X] L + 1.
template <BaseRing R>
SplitClass<R> curve_class_times_lefschetz_plus_one(const AtomEnvironment<R>& env);

// sum_n lambda^n(c) x^n up to x^order.
template <BaseRing R>
TruncatedSeries<R> lambda_series(const SplitClass<R>& c, int order);

// lambda^n(c) = [Sym^n]; zero for n < 0.
template <BaseRing R>
R sym_power_class(const SplitClass<R>& c, int n);

extern template AtomEnvironment<UVLaurent> frobenius(const AtomEnvironment<UVLaurent>&, int);
extern template AtomEnvironment<BigRational> frobenius(const AtomEnvironment<BigRational>&, int);
extern template UVLaurent p_X(const AtomEnvironment<UVLaurent>&, const UVLaurent&);
extern template BigRational p_X(const AtomEnvironment<BigRational>&, const BigRational&);
extern template UVLaurent jacobian_class(const AtomEnvironment<UVLaurent>&);
extern template BigRational jacobian_class(const AtomEnvironment<BigRational>&);
extern template std::vector<UVLaurent> elementary_symmetric(const AtomEnvironment<UVLaurent>&);
extern template std::vector<BigRational> elementary_symmetric(const AtomEnvironment<BigRational>&);
extern template std::vector<UVLaurent> power_sums(const AtomEnvironment<UVLaurent>&, int);
extern template std::vector<BigRational> power_sums(const AtomEnvironment<BigRational>&, int);
extern template class SplitClass<UVLaurent>;
extern template class SplitClass<BigRational>;
extern template SplitClass<UVLaurent> curve_class(const AtomEnvironment<UVLaurent>&);
extern template SplitClass<BigRational> curve_class(const AtomEnvironment<BigRational>&);
extern template SplitClass<UVLaurent> curve_class_plus_lefschetz_squared(const AtomEnvironment<UVLaurent>&);
extern template SplitClass<BigRational> curve_class_plus_lefschetz_squared(const AtomEnvironment<BigRational>&);
extern template SplitClass<UVLaurent> curve_class_times_lefschetz_plus_one(const AtomEnvironment<UVLaurent>&);
extern template SplitClass<BigRational> curve_class_times_lefschetz_plus_one(const AtomEnvironment<BigRational>&);
extern template TruncatedSeries<UVLaurent> lambda_series(const SplitClass<UVLaurent>&, int);
extern template TruncatedSeries<BigRational> lambda_series(const SplitClass<BigRational>&, int);
extern template UVLaurent sym_power_class(const SplitClass<UVLaurent>&, int);
extern template BigRational sym_power_class(const SplitClass<BigRational>&, int);

}  // namespace motive_forge
