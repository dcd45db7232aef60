#include "motive_forge/curve_ring.hpp"

#include <random>
#include <string>

#include "motive_forge/error.hpp"

namespace motive_forge {

namespace {

void require_genus(int genus) {
    if (genus < 2) throw Error(ErrorKind::InvalidGenus, "genus must be >= 2, got " + std::to_string(genus));
}

// Uniform integer in [lo, hi] from the raw engine output, so the draw is
// identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

BigRational draw_nonzero_rational(std::mt19937_64& rng) {
    long num = 0;
    while (num == 0) num = draw(rng, -kWeilSampleBound, kWeilSampleBound);
    const long den = draw(rng, 1, kWeilSampleBound);
    return BigRational(num, den);
}

}  // namespace

std::string_view to_string(Realization r) noexcept { return r == Realization::hodge ? "hodge" : "weil"; }

HodgeEnvironment make_hodge_env(int genus) {
    require_genus(genus);
    HodgeEnvironment env;
    env.genus = genus;
    env.base = Realization::hodge;
    env.lefschetz = UVLaurent::monomial(1, 1, 1);
    env.betas.assign(static_cast<std::size_t>(genus), UVLaurent::monomial(-1, 1, 0));
    env.betas.insert(env.betas.end(), static_cast<std::size_t>(genus), UVLaurent::monomial(-1, 0, 1));
    return env;
}

WeilEnvironment make_weil_env(int genus, std::uint64_t seed) {
    require_genus(genus);
    std::mt19937_64 rng(seed);
    WeilEnvironment env;
    env.genus = genus;
    env.base = Realization::weil;
    env.seed = seed;
    // L must avoid 0 and +-1 so that no L^a (a >= 1) equals 1 and the
    // (L^k - 1) denominators stay invertible.
    do {
        env.lefschetz = draw_nonzero_rational(rng);
    } while (env.lefschetz.is_one() || env.lefschetz == BigRational(-1));
    for (int i = 0; i < genus; ++i) env.betas.push_back(draw_nonzero_rational(rng));
    for (int i = 0; i < genus; ++i) env.betas.push_back(env.lefschetz / env.betas[static_cast<std::size_t>(i)]);
    return env;
}

template <BaseRing R>
AtomEnvironment<R> frobenius(const AtomEnvironment<R>& env, int j) {
    if (j < 1) throw Error(ErrorKind::InvalidSpec, "Adams index must be >= 1");
    AtomEnvironment<R> out = env;
    if (j == 1) return out;
    out.lefschetz = pow(env.lefschetz, j);
    for (auto& beta : out.betas) {
        beta = -pow(-beta, j);
    }
    out.frobenius_power = env.frobenius_power * j;
    return out;
}

template <BaseRing R>
R p_X(const AtomEnvironment<R>& env, const R& arg) {
    R result(1);
    for (const auto& beta : env.betas) result = result * (R(1) + beta * arg);
    return result;
}

template <BaseRing R>
R jacobian_class(const AtomEnvironment<R>& env) {
    return p_X(env, R(1));
}

template <BaseRing R>
std::vector<R> elementary_symmetric(const AtomEnvironment<R>& env) {
    std::vector<R> e(env.betas.size() + 1);
    e[0] = R(1);
    for (const auto& beta : env.betas) {
        for (std::size_t n = e.size() - 1; n >= 1; --n) e[n] = e[n] + beta * e[n - 1];
    }
    return e;
}

template <BaseRing R>
std::vector<R> power_sums(const AtomEnvironment<R>& env, int count) {
    std::vector<R> p(static_cast<std::size_t>(count) + 1);
    p[0] = R(static_cast<long>(env.betas.size()));
    for (const auto& beta : env.betas) {
        R power = beta;
        for (int j = 1; j <= count; ++j) {
            p[static_cast<std::size_t>(j)] = p[static_cast<std::size_t>(j)] + power;
            power = power * beta;
        }
    }
    return p;
}

template <BaseRing R>
SplitClass<R>& SplitClass<R>::add(R value, AtomKind kind) {
    if constexpr (std::is_same_v<R, UVLaurent>) {
        if (!value.is_monomial()) {
            throw Error(ErrorKind::NotSplit, "atom " + value.to_string() + " is not a line element");
        }
    } else {
        if (value.is_zero()) throw Error(ErrorKind::NotSplit, "zero atom");
    }
    atoms_.push_back({std::move(value), kind});
    return *this;
}

template <BaseRing R>
R SplitClass<R>::value() const {
    R sum{};
    for (const auto& a : atoms_) sum = sum + a.value;
    return sum;
}

template <BaseRing R>
SplitClass<R> SplitClass<R>::scaled(const R& line) const {
    SplitClass out;
    for (const auto& a : atoms_) out.add(a.value * line, a.kind);
    return out;
}

template <BaseRing R>
SplitClass<R> curve_class(const AtomEnvironment<R>& env) {
    SplitClass<R> c;
    c.add_geometric(R(1));
    for (const auto& beta : env.betas) c.add_finite(beta);
    c.add_geometric(env.lefschetz);
    return c;
}

template <BaseRing R>
SplitClass<R> curve_class_plus_lefschetz_squared(const AtomEnvironment<R>& env) {
    SplitClass<R> c = curve_class(env);
    c.add_geometric(env.lefschetz * env.lefschetz);
    return c;
}

template <BaseRing R>
SplitClass<R> curve_class_times_lefschetz_plus_one(const AtomEnvironment<R>& env) {
    SplitClass<R> c = curve_class(env).scaled(env.lefschetz);
    c.add_geometric(R(1));
    return c;
}

template <BaseRing R>
TruncatedSeries<R> lambda_series(const SplitClass<R>& c, int order) {
    if (order < 0) return TruncatedSeries<R>(order);
    std::vector<R> s(static_cast<std::size_t>(order) + 1);
    s[0] = R(1);
    for (const auto& atom : c.atoms()) {
        if (atom.kind == AtomKind::geometric) {
            for (std::size_t n = 1; n < s.size(); ++n) s[n] = s[n] + atom.value * s[n - 1];
        } else {
            for (std::size_t n = s.size() - 1; n >= 1; --n) s[n] = s[n] + atom.value * s[n - 1];
        }
    }
    return TruncatedSeries<R>::from_coefficients(std::move(s), order);
}

template <BaseRing R>
R sym_power_class(const SplitClass<R>& c, int n) {
    if (n < 0) return R{};
    return lambda_series(c, n).coeff(n);
}

template AtomEnvironment<UVLaurent> frobenius(const AtomEnvironment<UVLaurent>&, int);
template AtomEnvironment<BigRational> frobenius(const AtomEnvironment<BigRational>&, int);
template UVLaurent p_X(const AtomEnvironment<UVLaurent>&, const UVLaurent&);
template BigRational p_X(const AtomEnvironment<BigRational>&, const BigRational&);
template UVLaurent jacobian_class(const AtomEnvironment<UVLaurent>&);
template BigRational jacobian_class(const AtomEnvironment<BigRational>&);
template std::vector<UVLaurent> elementary_symmetric(const AtomEnvironment<UVLaurent>&);
template std::vector<BigRational> elementary_symmetric(const AtomEnvironment<BigRational>&);
template std::vector<UVLaurent> power_sums(const AtomEnvironment<UVLaurent>&, int);
template std::vector<BigRational> power_sums(const AtomEnvironment<BigRational>&, int);
template class SplitClass<UVLaurent>;
template class SplitClass<BigRational>;
template SplitClass<UVLaurent> curve_class(const AtomEnvironment<UVLaurent>&);
template SplitClass<BigRational> curve_class(const AtomEnvironment<BigRational>&);
template SplitClass<UVLaurent> curve_class_plus_lefschetz_squared(const AtomEnvironment<UVLaurent>&);
template SplitClass<BigRational> curve_class_plus_lefschetz_squared(const AtomEnvironment<BigRational>&);
template SplitClass<UVLaurent> curve_class_times_lefschetz_plus_one(const AtomEnvironment<UVLaurent>&);
template SplitClass<BigRational> curve_class_times_lefschetz_plus_one(const AtomEnvironment<BigRational>&);
template TruncatedSeries<UVLaurent> lambda_series(const SplitClass<UVLaurent>&, int);
template TruncatedSeries<BigRational> lambda_series(const SplitClass<BigRational>&, int);
template UVLaurent sym_power_class(const SplitClass<UVLaurent>&, int);
template BigRational sym_power_class(const SplitClass<BigRational>&, int);

}  // namespace motive_forge
