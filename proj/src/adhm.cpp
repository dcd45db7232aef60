#include "motive_forge/adhm.hpp"

#include <functional>

#include "motive_forge/error.hpp"

namespace motive_forge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw Error(ErrorKind::InvalidSpec, "partition parts must be positive and non-increasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells() const {
    const auto conj = conjugate().parts();
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (int j = 1; j <= parts_[i]; ++j) {
            Cell c;
            c.i = static_cast<int>(i) + 1;
            c.j = j;
            c.arm = parts_[i] - j;
            c.leg = conj[static_cast<std::size_t>(j - 1)] - c.i;
            c.hook = c.arm + c.leg + 1;
            out.push_back(c);
        }
    }
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidSpec, "partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int mobius(int j) {
    if (j < 1) throw Error(ErrorKind::InvalidSpec, "mobius needs j >= 1");
    int result = 1;
    for (int q = 2; q * q <= j; ++q) {
        if (j % q != 0) continue;
        j /= q;
        if (j % q == 0) return 0;
        result = -result;
    }
    if (j > 1) result = -result;
    return result;
}

template <BaseRing R>
TRational<R> partition_term(const AtomEnvironment<R>& env, const Partition& lambda, int p) {
    using Poly = TPoly<R>;
    const int g = env.genus;
    const std::vector<R> e = elementary_symmetric(env);
    const R& L = env.lefschetz;

    Poly num(R(1));
    std::vector<DenFactor<R>> den;
    int unit_factors = 0, arm_zero = 0;
    for (const Cell& s : lambda.cells()) {
        const R La = pow(L, s.arm);
        // (-t^{a-l} L^a)^p t^{(1-g)(2l+1)}
        const R lead = (p % 2 == 0 ? R(1) : R(-1)) * pow(La, p);
        num = num * Poly::monomial(lead, p * (s.arm - s.leg) + (1 - g) * (2 * s.leg + 1));
        // P_X(t^h L^a) = sum_i e_i L^{ai} t^{hi}
        std::vector<R> px(e.size() * static_cast<std::size_t>(s.hook));
        R scale(1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            px[i * static_cast<std::size_t>(s.hook)] = e[i] * scale;
            scale = scale * La;
        }
        num = num * Poly::from_coefficients(std::move(px), 0);
        den.push_back({La, s.hook});
        den.push_back({La * L, s.hook});
        if (s.arm == 0) ++arm_zero;
        unit_factors += (La.is_one() ? 1 : 0) + ((La * L).is_one() ? 1 : 0);
    }
    if (unit_factors != arm_zero) {
        throw Error(ErrorKind::InvalidSpec, "degenerate environment: L^a = 1 for some a != 0");
    }
    return TRational<R>(std::move(num), std::move(den));
}

template <BaseRing R>
TRational<R> script_h(const AtomEnvironment<R>& env, int n, int p) {
    if (n < 1 || p < 1) throw Error(ErrorKind::InvalidSpec, "script_h needs n >= 1 and p >= 1");
    TRational<R> sum;
    for (const auto& lambda : partitions(n)) sum = sum + partition_term(env, lambda, p);
    return sum;
}

template <BaseRing R>
std::vector<TRational<R>> plog_h(const AtomEnvironment<R>& env, int r, int p) {
    if (r < 1) throw Error(ErrorKind::InvalidSpec, "plog_h needs r >= 1");
    using Series = TruncatedSeries<TRational<R>>;
    Series total(r);
    for (int j = 1; j <= r; ++j) {
        const int mu = mobius(j);
        if (mu == 0) continue;
        // sum_n psi_j[H_n](t) T^{jn}: Frobenius on the atoms, then t -> t^j.
        const AtomEnvironment<R> psi = frobenius(env, j);
        Series s = Series::constant(TRational<R>(1), r);
        for (int n = 1; j * n <= r; ++n) s.set_coeff(j * n, script_h(psi, n, p).substitute_t_power(j));
        total += series_log(s) * BigRational(mu, j);
    }
    // (1 - t)(1 - L t)
    const TRational<R> prefactor(TPoly<R>(R(1)).times_binomial(R(1), 1).times_binomial(env.lefschetz, 1));
    std::vector<TRational<R>> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int n = 1; n <= r; ++n) out.push_back((prefactor * total.coeff(n)).cancelled());
    return out;
}

template <BaseRing R>
R mozgovoy_class(const AtomEnvironment<R>& env, int g, int r, int p) {
    if (g != env.genus) throw Error(ErrorKind::InvalidSpec, "genus does not match the environment");
    if (g < 2) throw Error(ErrorKind::InvalidGenus, "genus must be >= 2");
    if (p < 1) throw Error(ErrorKind::InvalidSpec, "p must be >= 1");
    const TRational<R> Hr = plog_h(env, r, p).back();
    R value = Hr.eval_at_one();
    if constexpr (std::is_same_v<R, UVLaurent>) {
        if (!value.has_integer_coefficients()) {
            throw Error(ErrorKind::NotDivisible, "H_" + std::to_string(r) + "(1) has non-integer coefficients");
        }
    }
    const int sign = (p * r) % 2 == 0 ? 1 : -1;
    return pow(env.lefschetz, r * r * (g - 1) + p * r * (r + 1) / 2) * value * BigRational(sign);
}

#define MOTIVE_FORGE_ADHM_INSTANTIATE(R)                                                  \
    template TRational<R> partition_term(const AtomEnvironment<R>&, const Partition&, int); \
    template TRational<R> script_h(const AtomEnvironment<R>&, int, int);                   \
    template std::vector<TRational<R>> plog_h(const AtomEnvironment<R>&, int, int);        \
    template R mozgovoy_class(const AtomEnvironment<R>&, int, int, int);
MOTIVE_FORGE_ADHM_INSTANTIATE(UVLaurent)
MOTIVE_FORGE_ADHM_INSTANTIATE(BigRational)
#undef MOTIVE_FORGE_ADHM_INSTANTIATE

}  // namespace motive_forge
