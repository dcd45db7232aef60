#include "motive_forge/moduli.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "motive_forge/error.hpp"

namespace motive_forge {

namespace {

template <BaseRing R>
R lambda_of(const SplitClass<R>& c, int n) {
    if (n < 0) throw Error(ErrorKind::EmptyStratum, "negative lambda index " + std::to_string(n));
    return sym_power_class(c, n);
}

template <BaseRing R>
R lefschetz_pow(const AtomEnvironment<R>& env, int e) {
    return pow(env.lefschetz, e);
}

void require_shape(const VHSType& t) {
    if (t.ranks.size() != t.degrees.size() || t.ranks.empty()) {
        throw Error(ErrorKind::InvalidSpec, "multirank and multidegree lengths differ");
    }
    for (int r : t.ranks) {
        if (r < 1) throw Error(ErrorKind::InvalidSpec, "ranks must be positive");
    }
}

bool is_shape(const VHSType& t, std::initializer_list<int> ranks) {
    return std::equal(t.ranks.begin(), t.ranks.end(), ranks.begin(), ranks.end());
}

// (2,1) of degree (d1, d - d1) is dual to (1,2) of degree (d1 - d, -d1).
VHSType dual_of_21(const VHSType& t) {
    const int d = t.degree();
    return VHSType::pair(1, 2, -d, t.degrees[0] - d);
}

bool in_delta(int d, int dL, int a, int b) {
    return a - b <= -dL && a + 2 * b - d <= -dL && 3 * a > d && 3 * (a + b) > 2 * d;
}

// chi(Hom(E_i, E_j) (x) L^m) on a curve of genus g.
int chi_hom(const VHSType& t, std::size_t i, std::size_t j, int m, int twist_deg, int g) {
    const int ri = t.ranks[i], rj = t.ranks[j];
    return ri * t.degrees[j] - rj * t.degrees[i] + ri * rj * (m * twist_deg + 1 - g);
}

}  // namespace

std::string ModuliSpec::invalid_reason() const {
    std::ostringstream os;
    if (g < 2) {
        os << "genus must be >= 2 (got " << g << ")";
    } else if (r < 1 || r > 3) {
        os << "rank must be 1, 2 or 3 (got " << r << ")";
    } else if (std::gcd(r, d) != 1) {
        os << "gcd(r, d) must be 1 (got r=" << r << ", d=" << d << ")";
    } else if (dL >= 2 - 2 * g) {
        os << "dL must be < 2 - 2g = " << 2 - 2 * g << " (got " << dL << "), i.e. p >= 1";
    }
    return os.str();
}

void ModuliSpec::validate() const {
    const std::string reason = invalid_reason();
    if (reason.empty()) return;
    throw Error(g < 2 ? ErrorKind::InvalidGenus : ErrorKind::InvalidSpec, reason);
}

int VHSType::rank() const { return std::accumulate(ranks.begin(), ranks.end(), 0); }
int VHSType::degree() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

std::string VHSType::shape() const {
    std::string s = "(";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ranks[i]);
    }
    return s + ")";
}

int dimension(const ModuliSpec& spec) {
    spec.validate();
    return 1 - spec.r * spec.r * spec.dL;
}

template <BaseRing R>
R bundle_moduli_class(const AtomEnvironment<R>& env, int r, int d) {
    if (r < 1 || r > 3) throw Error(ErrorKind::InvalidSpec, "bundle moduli only for r <= 3");
    if (std::gcd(r, d) != 1) throw Error(ErrorKind::InvalidSpec, "gcd(r, d) must be 1");
    const int g = env.genus;
    const R& L = env.lefschetz;
    const R one(1);
    const R J = jacobian_class(env);
    if (r == 1) return J;
    const R L2 = L * L;
    const R P1 = p_X(env, L);
    if (r == 2) {
        return exact_quotient(J * P1 - pow(L, g) * J * J, (L - one) * (L2 - one));
    }
    const R L3 = L2 * L;
    const R P2 = p_X(env, L2);
    const R onePlusL = one + L;
    const R inner = pow(L, 3 * g - 1) * (one + L + L2) * J * J - pow(L, 2 * g - 1) * onePlusL * onePlusL * J * P1 + P1 * P2;
    return exact_quotient(J * inner, (L - one) * (L2 - one) * (L2 - one) * (L3 - one));
}

bool stratum_nonempty(const VHSType& t, int dL) {
    require_shape(t);
    const int d = t.degree();
    if (t.ranks.size() == 1) return std::gcd(t.ranks[0], d) == 1;
    if (is_shape(t, {1, 1})) {
        const int d1 = t.degrees[0];
        return 2 * d1 > d && 2 * d1 <= d - dL;
    }
    if (is_shape(t, {1, 2})) {
        const int d1 = t.degrees[0];
        return 3 * d1 > d && 6 * d1 < 2 * d - 3 * dL;
    }
    if (is_shape(t, {2, 1})) return stratum_nonempty(dual_of_21(t), dL);
    if (is_shape(t, {1, 1, 1})) return in_delta(d, dL, t.degrees[0], t.degrees[1]);
    throw Error(ErrorKind::InvalidSpec, "unsupported stratum shape " + t.shape());
}

template <BaseRing R>
R vhs_class(const AtomEnvironment<R>& env, const VHSType& t, int dL) {
    if (!stratum_nonempty(t, dL)) {
        throw Error(ErrorKind::EmptyStratum, "stratum " + t.shape() + " is empty for these degrees");
    }
    const int d = t.degree();
    const int g = env.genus;
    if (t.ranks.size() == 1) return bundle_moduli_class(env, t.ranks[0], d);

    const R J = jacobian_class(env);
    if (is_shape(t, {1, 1})) {
        return J * lambda_of(curve_class(env), d - 2 * t.degrees[0] - dL);
    }
    if (is_shape(t, {2, 1})) return vhs_class(env, dual_of_21(t), dL);
    if (is_shape(t, {1, 2})) {
        const int d1 = t.degrees[0];
        const int fl = static_cast<int>(floor_div(d, 3));
        const int n = d - fl - 2 * d1 - dL - 1;
        const R plus = lefschetz_pow(env, 2 * fl - d + d1 + g + 1) * lambda_of(curve_class_plus_lefschetz_squared(env), n);
        const R minus = lambda_of(curve_class_times_lefschetz_plus_one(env), n);
        return exact_quotient(J * J * (plus - minus), env.lefschetz - R(1));
    }
    // (1,1,1)
    const int d1 = t.degrees[0], d2 = t.degrees[1];
    const auto X = curve_class(env);
    return lambda_of(X, -d1 + d2 - dL) * lambda_of(X, d - d1 - 2 * d2 - dL) * J;
}

std::vector<std::pair<int, int>> delta_set(int d, int dL) {
    std::vector<std::pair<int, int>> out;
    const long a_lo = ceil_div(d, 3);
    const long a_hi = -dL + floor_div(d, 3);
    for (long a = a_lo; a <= a_hi; ++a) {
        const long b_lo = std::max<long>(dL + a, ceil_div(2L * d, 3) - a);
        const long b_hi = floor_div(d - dL - a, 2);
        for (long b = b_lo; b <= b_hi; ++b) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return out;
}

std::vector<std::pair<int, int>> delta_set_bruteforce(int d, int dL) {
    // The constraints force |a|, |b| <= |d| - dL, so this box is generous.
    const int box = 4 * (std::abs(d) - dL) + 8;
    std::vector<std::pair<int, int>> out;
    for (int a = -box; a <= box; ++a) {
        for (int b = -box; b <= box; ++b) {
            if (in_delta(d, dL, a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

int morse_index(const VHSType& t, int twist_deg, int g) {
    require_shape(t);
    const std::size_t k = t.ranks.size();
    int half = 0;
    for (std::size_t l = 1; l < k; ++l) {
        // -chi(C_l) = sum chi(Hom(E_i, E_{i+l+1}) (x) L) - sum chi(Hom(E_i, E_{i+l})).
        for (std::size_t i = 0; i + l + 1 < k; ++i) half += chi_hom(t, i, i + l + 1, 1, twist_deg, g);
        for (std::size_t i = 0; i + l < k; ++i) half -= chi_hom(t, i, i + l, 0, twist_deg, g);
    }
    return 2 * half;
}

int stratum_dimension(const VHSType& t, int dL, int g) {
    require_shape(t);
    const int d = t.degree();
    if (t.ranks.size() == 1) return t.ranks[0] * t.ranks[0] * (g - 1) + 1;
    if (is_shape(t, {1, 1})) return d - 2 * t.degrees[0] - dL + g;
    if (is_shape(t, {1, 2})) return 3 * g - 2 - 3 * t.degrees[0] + d - 2 * dL;
    if (is_shape(t, {2, 1})) return stratum_dimension(dual_of_21(t), dL, g);
    if (is_shape(t, {1, 1, 1})) {
        const int d1 = t.degrees[0], d2 = t.degrees[1];
        return (-d1 + d2 - dL) + (d - d1 - 2 * d2 - dL) + g;
    }
    throw Error(ErrorKind::InvalidSpec, "unsupported stratum shape " + t.shape());
}

int bb_exponent(const VHSType& t, const ModuliSpec& spec) {
    spec.validate();
    if (t.rank() != spec.r || t.degree() != spec.d) {
        throw Error(ErrorKind::InvalidSpec, "stratum " + t.shape() + " does not match the spec's rank and degree");
    }
    if (!stratum_nonempty(t, spec.dL)) {
        throw Error(ErrorKind::EmptyStratum, "stratum " + t.shape() + " is empty for these degrees");
    }
    const int M = morse_index(t, -spec.dL, spec.g);
    return 1 - spec.r * spec.r * spec.dL - stratum_dimension(t, spec.dL, spec.g) - M / 2;
}

std::vector<StratumTerm> strata(const ModuliSpec& spec) {
    spec.validate();
    const int d = spec.d, dL = spec.dL;
    std::vector<VHSType> types{VHSType::bundle(spec.r, d)};
    if (spec.r == 2) {
        for (long d1 = floor_div(d, 2) + 1; d1 <= floor_div(d - dL, 2); ++d1) {
            types.push_back(VHSType::pair(1, 1, d, static_cast<int>(d1)));
        }
    } else if (spec.r == 3) {
        // floor(d/3 - dL/2) and floor(2d/3 - dL/2) over a common denominator.
        for (long d1 = floor_div(d, 3) + 1; d1 <= floor_div(2L * d - 3L * dL, 6); ++d1) {
            types.push_back(VHSType::pair(1, 2, d, static_cast<int>(d1)));
        }
        for (long d1 = floor_div(2L * d, 3) + 1; d1 <= floor_div(4L * d - 3L * dL, 6); ++d1) {
            types.push_back(VHSType::pair(2, 1, d, static_cast<int>(d1)));
        }
        for (const auto& [a, b] : delta_set(d, dL)) types.push_back(VHSType::triple(d, a, b));
    }
    std::vector<StratumTerm> out;
    out.reserve(types.size());
    for (auto& t : types) {
        const int e = bb_exponent(t, spec);
        out.push_back({std::move(t), e});
    }
    return out;
}

namespace {

template <BaseRing R>
R assemble(const AtomEnvironment<R>& env, const ModuliSpec& spec, int rank) {
    spec.validate();
    if (spec.r != rank) throw Error(ErrorKind::InvalidSpec, "spec rank does not match the requested formula");
    if (spec.g != env.genus) throw Error(ErrorKind::InvalidSpec, "spec genus does not match the environment");
    R total{};
    for (const auto& s : strata(spec)) total = total + lefschetz_pow(env, s.exponent) * vhs_class(env, s.type, spec.dL);
    return total;
}

}  // namespace

template <BaseRing R>
R motive_rank1(const AtomEnvironment<R>& env, const ModuliSpec& spec) {
    return assemble(env, spec, 1);
}

template <BaseRing R>
R motive_rank2(const AtomEnvironment<R>& env, const ModuliSpec& spec) {
    return assemble(env, spec, 2);
}

template <BaseRing R>
R motive_rank3(const AtomEnvironment<R>& env, const ModuliSpec& spec) {
    return assemble(env, spec, 3);
}

template <BaseRing R>
R moduli_motive(const AtomEnvironment<R>& env, const ModuliSpec& spec) {
    return assemble(env, spec, spec.r);
}

// ---------------------------------------------------------------------------
// Closed-form E-polynomials. Everything below works in u, v with w = uv.

namespace {

using USeries = TruncatedSeries<UVLaurent>;

const UVLaurent kU = UVLaurent::u();
const UVLaurent kV = UVLaurent::v();

UVLaurent w_pow(int e) { return UVLaurent::monomial(1, e, e); }

// (1 - u^a v^b)^g.
UVLaurent one_minus_pow(int a, int b, int g) { return pow(UVLaurent(1) - UVLaurent::monomial(1, a, b), g); }

// (1 - ux)^g (1 - vx)^g as a series in x known to `order`.
USeries a_series(int g, int order) {
    USeries s = USeries::constant(UVLaurent(1), order);
    for (int i = 0; i < g; ++i) {
        s = s * USeries::from_coefficients({UVLaurent(1), -kU}, order);
        s = s * USeries::from_coefficients({UVLaurent(1), -kV}, order);
    }
    return s;
}

struct Geometric {
    UVLaurent c;
    int m;
};

// coeff_{x^0} of (1-ux)^g (1-vx)^g x^shift / prod (1 - c x^m).
UVLaurent coeff_x0(int g, int shift, const std::vector<Geometric>& den) {
    const int order = -shift;
    if (order < 0) return UVLaurent{};
    USeries s = a_series(g, order);
    for (const auto& f : den) s = s * geometric_series(f.c, f.m, order);
    return coeff_extract(s.shifted(shift), 0);
}

UVLaurent e_bundle2(int g) {
    const UVLaurent J = one_minus_pow(1, 0, g) * one_minus_pow(0, 1, g);
    const UVLaurent num = J * one_minus_pow(2, 1, g) * one_minus_pow(1, 2, g) -
                          w_pow(g) * one_minus_pow(1, 0, 2 * g) * one_minus_pow(0, 1, 2 * g);
    return exact_divide(num, (w_pow(1) - UVLaurent(1)) * (w_pow(2) - UVLaurent(1)));
}

UVLaurent e_bundle3(int g) {
    const UVLaurent one(1);
    const UVLaurent J = one_minus_pow(1, 0, g) * one_minus_pow(0, 1, g);
    const UVLaurent PL = one_minus_pow(2, 1, g) * one_minus_pow(1, 2, g);
    const UVLaurent PL2 = one_minus_pow(3, 2, g) * one_minus_pow(2, 3, g);
    const UVLaurent w = w_pow(1);
    const UVLaurent inner = w_pow(3 * g - 1) * (one + w + w_pow(2)) * one_minus_pow(1, 0, 2 * g) * one_minus_pow(0, 1, 2 * g) -
                            w_pow(2 * g - 1) * pow(one + w, 2) * J * PL + PL * PL2;
    const UVLaurent den = (w - one) * pow(w_pow(2) - one, 2) * (w_pow(3) - one);
    return exact_divide(J * inner, den);
}

// coeff_{x^0 y^0} of
//   F(x) F(y) x^{2dL+2} y^{2dL+1} (x^{-2dL} - y^{-dL}) (y^{-2dL} - x^{-dL}) / ((x - y^2)(y - x^2))
// with F = (1-ux)^g (1-vx)^g / ((1-x)(1-uvx)), expanding in the region
// |y^2| < |x|, |x^2| < |y|:
//   1/(x - y^2) = sum_k y^{2k} x^{-k-1},  1/(y - x^2) = sum_l x^{2l} y^{-l-1}.
// For a numerator monomial x^al y^be the (k, l) term needs F_i F_j with
// i = k + 1 - 2l - al, j = l + 1 - 2k - be, both >= 0, hence k + l <= 2 - al - be.
UVLaurent double_extract(int g, int dL) {
    struct Mono {
        int al, be, sign;
    };
    const Mono monos[] = {
        {2, 1, +1},
        {2 - dL, 2 * dL + 1, -1},
        {2 * dL + 2, 1 - dL, -1},
        {dL + 2, dL + 1, +1},
    };
    int order = 0;
    for (const auto& m : monos) {
        const int budget = 2 - m.al - m.be;
        if (budget < 0) continue;
        order = std::max({order, budget + 1 - m.al, budget + 1 - m.be});
    }
    USeries F = a_series(g, order);
    F = F * geometric_series(UVLaurent(1), 1, order) * geometric_series(w_pow(1), 1, order);

    UVLaurent total;
    for (const auto& m : monos) {
        const int budget = 2 - m.al - m.be;
        for (int k = 0; k <= budget; ++k) {
            for (int l = 0; k + l <= budget; ++l) {
                const int i = k + 1 - 2 * l - m.al;
                const int j = l + 1 - 2 * k - m.be;
                if (i < 0 || j < 0) continue;
                const UVLaurent term = coeff_extract(F, i) * coeff_extract(F, j);
                total = m.sign > 0 ? total + term : total - term;
            }
        }
    }
    return total;
}

}  // namespace

UVLaurent epoly_rank2(const ModuliSpec& spec) {
    spec.validate();
    if (spec.r != 2) throw Error(ErrorKind::InvalidSpec, "epoly_rank2 needs r = 2");
    const int g = spec.g, dL = spec.dL;
    const UVLaurent J = one_minus_pow(1, 0, g) * one_minus_pow(0, 1, g);
    const UVLaurent c = coeff_x0(g, dL + 1, {{UVLaurent(1), 2}, {UVLaurent(1), 1}, {w_pow(1), 1}});
    return w_pow(-4 * dL + 4 - 4 * g) * e_bundle2(g) + w_pow(-3 * dL + 2 - 2 * g) * J * c;
}

UVLaurent epoly_rank3(const ModuliSpec& spec) {
    spec.validate();
    if (spec.r != 3) throw Error(ErrorKind::InvalidSpec, "epoly_rank3 needs r = 3");
    const int g = spec.g, dL = spec.dL;
    const UVLaurent one(1);
    const UVLaurent w = w_pow(1);
    const UVLaurent J = one_minus_pow(1, 0, g) * one_minus_pow(0, 1, g);
    const UVLaurent J2 = one_minus_pow(1, 0, 2 * g) * one_minus_pow(0, 1, 2 * g);

    // 1/((1-x)(1-uvx)(1-(uv)^2 x)(1-uvx^2))
    const std::vector<Geometric> near{{one, 1}, {w, 1}, {w_pow(2), 1}, {w, 2}};
    // 1/((1-x)(1-uvx)(uv-x)((uv)^2-x^2)) = (uv)^-3 / ((1-x)(1-uvx)(1-x/uv)(1-x^2/(uv)^2))
    const std::vector<Geometric> far{{one, 1}, {w, 1}, {w_pow(-1), 1}, {w_pow(-2), 2}};

    const UVLaurent c1 = coeff_x0(g, dL + 2, near);
    const UVLaurent c2 = w_pow(-3) * coeff_x0(g, dL + 2, far);
    const UVLaurent c3 = coeff_x0(g, dL + 1, near);
    const UVLaurent c4 = w_pow(-3) * coeff_x0(g, dL + 1, far);

    const UVLaurent chain_sum = w_pow(-7 * dL + 6 - 4 * g) * c1 - w_pow(-8 * dL + 6 - 5 * g) * c2 +
                                w_pow(-7 * dL + 5 - 4 * g) * c3 - w_pow(-8 * dL + 7 - 5 * g) * c4;

    return w_pow(-9 * dL + 9 - 9 * g) * e_bundle3(g) + exact_divide(J2 * chain_sum, w - one) +
           J * w_pow(-6 * dL + 3 - 3 * g) * double_extract(g, dL);
}

UVLaurent epoly(const ModuliSpec& spec) {
    spec.validate();
    switch (spec.r) {
        case 1: return motive_rank1(make_hodge_env(spec.g), spec);
        case 2: return epoly_rank2(spec);
        default: return epoly_rank3(spec);
    }
}

std::vector<long> poincare(const UVLaurent& e) {
    if (e.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "poincare of the zero polynomial");
    // E(-t, -t): u^a v^b contributes (-1)^{a+b} t^{a+b}.
    const int top = e.total_degree();
    const int low = e.min_total_degree();
    if (low < 0) throw Error(ErrorKind::NegativeBetti, "E-polynomial has negative weights");
    std::vector<BigRational> q(static_cast<std::size_t>(top + 1));
    for (const auto& term : e.terms()) {
        const int n = term.a + term.b;
        q[static_cast<std::size_t>(n)] += (n % 2 == 0) ? term.c : -term.c;
    }
    // Purity: E(-t,-t) = sum_j dim H_c^j t^j, and H_c^j is dual to H^{2n-j}.
    std::vector<long> betti;
    for (int k = 0; k <= top - low; ++k) {
        const BigRational& c = q[static_cast<std::size_t>(top - k)];
        if (!c.is_integer() || c.sign() < 0) {
            throw Error(ErrorKind::NegativeBetti, "coefficient of t^" + std::to_string(top - k) + " is " + c.to_string());
        }
        betti.push_back(c.numerator().get_si());
    }
    return betti;
}

#define MOTIVE_FORGE_MODULI_INSTANTIATE(R)                                      \
    template R bundle_moduli_class(const AtomEnvironment<R>&, int, int);        \
    template R vhs_class(const AtomEnvironment<R>&, const VHSType&, int);       \
    template R motive_rank1(const AtomEnvironment<R>&, const ModuliSpec&);      \
    template R motive_rank2(const AtomEnvironment<R>&, const ModuliSpec&);      \
    template R motive_rank3(const AtomEnvironment<R>&, const ModuliSpec&);      \
    template R moduli_motive(const AtomEnvironment<R>&, const ModuliSpec&);
MOTIVE_FORGE_MODULI_INSTANTIATE(UVLaurent)
MOTIVE_FORGE_MODULI_INSTANTIATE(BigRational)
#undef MOTIVE_FORGE_MODULI_INSTANTIATE

}  // namespace motive_forge
