#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "motive_forge/error.hpp"
#include "motive_forge/ring.hpp"

namespace motive_forge {

// Laurent polynomial in t with coefficients in R: coefficient i is attached
// to t^(low + i). Kept trimmed at both ends; zero has no coefficients.
template <BaseRing R>
class TPoly {
public:
    TPoly() = default;
    TPoly(long c) : TPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
    TPoly(R c) {                     // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }

    static TPoly monomial(R c, int exponent) {
        TPoly p(std::move(c));
        p.low_ = p.coeffs_.empty() ? 0 : exponent;
        return p;
    }

    static TPoly from_coefficients(std::vector<R> coeffs, int low) {
        TPoly p;
        p.coeffs_ = std::move(coeffs);
        p.low_ = low;
        p.trim();
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<R>& coefficients() const noexcept { return coeffs_; }

    R coeff(int e) const {
        if (e < low_ || e > high()) return R{};
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }

    // Value at t = 1.
    R at_one() const {
        R sum{};
        for (const auto& c : coeffs_) sum = sum + c;
        return sum;
    }

    // Multiply by (1 - c t^m), m >= 1.
    TPoly times_binomial(const R& c, int m) const {
        if (is_zero()) return {};
        std::vector<R> out(coeffs_.size() + static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out[i] = out[i] + coeffs_[i];
            out[i + static_cast<std::size_t>(m)] = out[i + static_cast<std::size_t>(m)] - c * coeffs_[i];
        }
        return from_coefficients(std::move(out), low_);
    }

    // Quotient by (1 - c t^m) when exact.
    std::optional<TPoly> divide_binomial(const R& c, int m) const {
        if (is_zero()) return TPoly{};
        const int n = static_cast<int>(coeffs_.size());
        if (n <= m) return std::nullopt;
        std::vector<R> q(static_cast<std::size_t>(n - m));
        for (int i = 0; i < n - m; ++i) {
            R qi = coeffs_[static_cast<std::size_t>(i)];
            if (i >= m) qi = qi + c * q[static_cast<std::size_t>(i - m)];
            q[static_cast<std::size_t>(i)] = std::move(qi);
        }
        // Top m coefficients must equal -c * q[i - m].
        for (int i = n - m; i < n; ++i) {
            if (!(coeffs_[static_cast<std::size_t>(i)] == -(c * q[static_cast<std::size_t>(i - m)]))) {
                return std::nullopt;
            }
        }
        return from_coefficients(std::move(q), low_);
    }

    // t -> t^j.
    TPoly substitute_power(int j) const {
        if (is_zero()) return {};
        std::vector<R> out((coeffs_.size() - 1) * static_cast<std::size_t>(j) + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(j)] = coeffs_[i];
        return from_coefficients(std::move(out), low_ * j);
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) { return combine(a, b, +1); }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return combine(a, b, -1); }
    TPoly operator-() const {
        TPoly p = *this;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coefficients(std::move(out), a.low_ + b.low_);
    }

    friend TPoly operator*(TPoly a, const BigRational& q) {
        if (q.is_zero()) return {};
        for (auto& c : a.coeffs_) c = c * q;
        return a;
    }

    friend TPoly operator*(TPoly a, const R& r)
        requires(!std::same_as<R, BigRational>)
    {
        for (auto& c : a.coeffs_) c = c * r;
        a.trim();
        return a;
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.low_ == b.low_ && a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e = high(); e >= low_; --e) {
            const R& c = coeffs_[static_cast<std::size_t>(e - low_)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << '(' << c.to_string() << ')';
            if (e != 0) os << "*t^" << e;
        }
        return os.str();
    }

private:
    void trim() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        while (coeffs_.back().is_zero()) coeffs_.pop_back();
        if (lead > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
            low_ += static_cast<int>(lead);
        }
    }

    static TPoly combine(const TPoly& a, const TPoly& b, int sign) {
        if (a.is_zero()) return sign > 0 ? b : -b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.low_, b.low_);
        const int hi = std::max(a.high(), b.high());
        std::vector<R> out(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(a.low_ - lo)] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            auto& slot = out[i + static_cast<std::size_t>(b.low_ - lo)];
            slot = sign > 0 ? slot + b.coeffs_[i] : slot - b.coeffs_[i];
        }
        return from_coefficients(std::move(out), lo);
    }

    int low_ = 0;
    std::vector<R> coeffs_;
};

// Denominator factor (1 - c t^m).
template <BaseRing R>
struct DenFactor {
    R c;
    int m = 1;

    friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

// Rational function in t: numerator over a multiset of (1 - c t^m) factors.
// Only factors with c == 1 vanish at t = 1.
template <BaseRing R>
class TRational {
public:
    using Poly = TPoly<R>;
    using Factor = DenFactor<R>;

    TRational() = default;
    TRational(long c) : num_(c) {}                // NOLINT(google-explicit-constructor)
    TRational(R c) : num_(std::move(c)) {}        // NOLINT(google-explicit-constructor)
    TRational(Poly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    TRational(Poly num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {
        for (const auto& f : den_) {
            if (f.m < 1) throw Error(ErrorKind::InvalidSpec, "denominator factor needs m >= 1");
        }
        if (num_.is_zero()) den_.clear();
    }

    // c * t^e.
    static TRational monomial(R c, int e) { return TRational(Poly::monomial(std::move(c), e)); }
    // 1 / (1 - c t^m).
    static TRational inverse_binomial(R c, int m) { return TRational(Poly(R(1)), {Factor{std::move(c), m}}); }

    const Poly& numerator() const noexcept { return num_; }
    const std::vector<Factor>& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    int unit_factor_count() const {
        return static_cast<int>(std::count_if(den_.begin(), den_.end(), [](const Factor& f) { return f.c.is_one(); }));
    }

    // Multiplicity of t = 1 as a root of the numerator.
    int numerator_vanishing_order() const {
        if (num_.is_zero()) return 0;
        int k = 0;
        Poly p = num_;
        while (auto q = p.divide_binomial(R(1), 1)) {
            p = std::move(*q);
            ++k;
        }
        return k;
    }

    // Positive when a genuine pole sits at t = 1.
    int pole_order_at_one() const { return unit_factor_count() - numerator_vanishing_order(); }

    // Drops denominator factors that divide the numerator exactly.
    TRational cancelled() const {
        TRational r = *this;
        std::vector<Factor> kept;
        for (const auto& f : r.den_) {
            if (auto q = r.num_.divide_binomial(f.c, f.m)) {
                r.num_ = std::move(*q);
            } else {
                kept.push_back(f);
            }
        }
        r.den_ = std::move(kept);
        return r;
    }

    friend TRational operator+(const TRational& a, const TRational& b) { return add(a, b, +1); }
    friend TRational operator-(const TRational& a, const TRational& b) { return add(a, b, -1); }
    TRational operator-() const { return TRational(-num_, den_); }

    friend TRational operator*(const TRational& a, const TRational& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Factor> den = a.den_;
        den.insert(den.end(), b.den_.begin(), b.den_.end());
        return TRational(a.num_ * b.num_, std::move(den));
    }

    friend TRational operator*(const TRational& a, const BigRational& q) { return TRational(a.num_ * q, a.den_); }
    friend TRational operator*(const TRational& a, const R& r)
        requires(!std::same_as<R, BigRational>)
    { return TRational(a.num_ * r, a.den_); }

    // Cross-multiplication over the merged denominator.
    friend bool operator==(const TRational& a, const TRational& b) {
        const auto common = merged(a.den_, b.den_);
        return a.scaled_to(common) == b.scaled_to(common);
    }

    // t -> t^j in the numerator and every factor.
    TRational substitute_t_power(int j) const {
        if (j < 1) throw Error(ErrorKind::InvalidSpec, "substitute_t_power needs j >= 1");
        std::vector<Factor> den = den_;
        for (auto& f : den) f.m *= j;
        return TRational(num_.substitute_power(j), std::move(den));
    }

    // Exact value at t = 1; PoleAtOne when the numerator does not vanish
    // to the order of the c == 1 factors.
    R eval_at_one() const {
        Poly p = num_;
        R den_value(1);
        int needed = 0;
        for (const auto& f : den_) {
            if (f.c.is_one()) {
                ++needed;
                den_value = den_value * R(static_cast<long>(f.m));
            } else {
                den_value = den_value * (R(1) - f.c);
            }
        }
        for (int k = 0; k < needed; ++k) {
            auto q = p.divide_binomial(R(1), 1);
            if (!q) {
                throw Error(ErrorKind::PoleAtOne, "numerator vanishes to order " + std::to_string(k) +
                                                      " at t=1 but " + std::to_string(needed) + " is needed");
            }
            p = std::move(*q);
        }
        // (1 - t^m) = (1 - t)(1 + ... + t^(m-1)), whose second factor is m at t = 1.
        return exact_quotient(p.at_one(), den_value);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[' << num_.to_string() << ']';
        for (const auto& f : den_) os << " / (1 - (" << f.c.to_string() << ")*t^" << f.m << ')';
        return os.str();
    }

private:
    static std::vector<Factor> merged(const std::vector<Factor>& a, const std::vector<Factor>& b) {
        std::vector<Factor> out = a;
        std::vector<bool> used(a.size(), false);
        for (const auto& f : b) {
            bool matched = false;
            for (std::size_t i = 0; i < out.size() && i < a.size(); ++i) {
                if (!used[i] && out[i] == f) {
                    used[i] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) out.push_back(f);
        }
        return out;
    }

    // Numerator rewritten over `common`, which must contain den_ as a sub-multiset.
    Poly scaled_to(const std::vector<Factor>& common) const {
        std::vector<bool> used(den_.size(), false);
        Poly p = num_;
        for (const auto& f : common) {
            bool matched = false;
            for (std::size_t i = 0; i < den_.size(); ++i) {
                if (!used[i] && den_[i] == f) {
                    used[i] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) p = p.times_binomial(f.c, f.m);
        }
        return p;
    }

    static TRational add(const TRational& a, const TRational& b, int sign) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return sign > 0 ? b : -b;
        auto common = merged(a.den_, b.den_);
        Poly pa = a.scaled_to(common);
        Poly pb = b.scaled_to(common);
        return TRational(sign > 0 ? pa + pb : pa - pb, std::move(common)).cancelled();
    }

    Poly num_;
    std::vector<Factor> den_;
};

template <BaseRing R>
TRational<R> trational_add(const TRational<R>& a, const TRational<R>& b) {
    return a + b;
}

template <BaseRing R>
TRational<R> trational_mul(const TRational<R>& a, const TRational<R>& b) {
    return a * b;
}

template <BaseRing R>
TRational<R> substitute_t_power(const TRational<R>& a, int j) {
    return a.substitute_t_power(j);
}

template <BaseRing R>
R eval_at_one(const TRational<R>& a) {
    return a.eval_at_one();
}

}  // namespace motive_forge
