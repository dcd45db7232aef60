#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "motive_forge/error.hpp"
#include "motive_forge/ring.hpp"

namespace motive_forge {

// Laurent series in one variable known exactly for exponents in
// [valuation, order]; everything above `order` is unknown and is never read.
// Plain power series have valuation 0.
template <ExactRing C>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order, int valuation = 0)
        : valuation_(valuation), order_(order), coeffs_(span(valuation, order)) {}

    static TruncatedSeries from_coefficients(std::vector<C> coeffs, int order, int valuation = 0) {
        TruncatedSeries s(order, valuation);
        for (std::size_t i = 0; i < coeffs.size() && i < s.coeffs_.size(); ++i) s.coeffs_[i] = std::move(coeffs[i]);
        return s;
    }

    static TruncatedSeries constant(C c, int order) {
        TruncatedSeries s(order);
        if (order >= 0) s.coeffs_[0] = std::move(c);
        return s;
    }

    // c * x^exponent, known up to `order`.
    static TruncatedSeries monomial(C c, int exponent, int order) {
        TruncatedSeries s(order, std::min(exponent, order + 1));
        if (exponent <= order) s.coeffs_[0] = std::move(c);
        return s;
    }

    int order() const noexcept { return order_; }
    int valuation() const noexcept { return valuation_; }
    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return c.is_zero(); });
    }

    C coeff(int n) const {
        if (n > order_) {
            throw Error(ErrorKind::InsufficientTruncation,
                        "coefficient " + std::to_string(n) + " requested from series known to order " +
                            std::to_string(order_));
        }
        if (n < valuation_) return C{};
        return coeffs_[static_cast<std::size_t>(n - valuation_)];
    }

    void set_coeff(int n, C c) {
        if (n > order_ || n < valuation_) {
            throw Error(ErrorKind::InsufficientTruncation, "set_coeff outside stored range");
        }
        coeffs_[static_cast<std::size_t>(n - valuation_)] = std::move(c);
    }

    // Multiply by x^k.
    TruncatedSeries shifted(int k) const {
        TruncatedSeries s = *this;
        s.valuation_ += k;
        s.order_ += k;
        return s;
    }

    TruncatedSeries truncated(int order) const {
        if (order > order_) {
            throw Error(ErrorKind::InsufficientTruncation, "cannot raise the order of a truncated series");
        }
        TruncatedSeries s(order, std::min(valuation_, order + 1));
        for (int n = s.valuation_; n <= order; ++n) s.coeffs_[idx(s, n)] = coeff(n);
        return s;
    }

    // x -> x^j; the known range scales with j.
    TruncatedSeries substitute_power(int j) const {
        TruncatedSeries s(order_ * j + (j - 1), valuation_ * j);
        for (int n = valuation_; n <= order_; ++n) s.coeffs_[idx(s, n * j)] = coeff(n);
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = combine(*this, o, +1); }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = combine(*this, o, -1); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return combine(a, b, +1); }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return combine(a, b, -1); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int val = a.valuation_ + b.valuation_;
        const int ord = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
        TruncatedSeries s(ord, std::min(val, ord + 1));
        for (int i = a.valuation_; i <= a.order_; ++i) {
            const C& x = a.coeffs_[idx(a, i)];
            if (x.is_zero()) continue;
            for (int j = b.valuation_; i + j <= ord && j <= b.order_; ++j) {
                const C& y = b.coeffs_[idx(b, j)];
                if (y.is_zero()) continue;
                s.coeffs_[idx(s, i + j)] = s.coeffs_[idx(s, i + j)] + x * y;
            }
        }
        return s;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const BigRational& q) {
        for (auto& c : a.coeffs_) c = c * q;
        return a;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const C& c)
        requires(!std::same_as<C, BigRational>)
    {
        for (auto& x : a.coeffs_) x = x * c;
        return a;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    // Equality of the known coefficients over the common precision.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int ord = std::min(a.order_, b.order_);
        for (int n = std::min(a.valuation_, b.valuation_); n <= ord; ++n) {
            if (!(a.coeff(n) == b.coeff(n))) return false;
        }
        return true;
    }

private:
    static std::size_t span(int valuation, int order) {
        return order >= valuation ? static_cast<std::size_t>(order - valuation + 1) : 0;
    }
    static std::size_t idx(const TruncatedSeries& s, int n) { return static_cast<std::size_t>(n - s.valuation_); }

    static TruncatedSeries combine(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
        const int ord = std::min(a.order_, b.order_);
        TruncatedSeries s(ord, std::min({a.valuation_, b.valuation_, ord + 1}));
        for (int n = s.valuation_; n <= ord; ++n) {
            s.coeffs_[idx(s, n)] = sign > 0 ? a.coeff(n) + b.coeff(n) : a.coeff(n) - b.coeff(n);
        }
        return s;
    }

    int valuation_ = 0;
    int order_ = -1;
    std::vector<C> coeffs_;
};

// Coefficient of x^n. Shifts by monomial prefactors go through shifted().
template <ExactRing C>
C coeff_extract(const TruncatedSeries<C>& series, int n) {
    return series.coeff(n);
}

// For a series whose coefficients are series in a second variable y:
// the x-series of y^n coefficients.
template <ExactRing C>
TruncatedSeries<C> coeff_extract_inner(const TruncatedSeries<TruncatedSeries<C>>& series, int n) {
    TruncatedSeries<C> out(series.order(), std::min(series.valuation(), series.order() + 1));
    for (int i = out.valuation(); i <= series.order(); ++i) {
        const TruncatedSeries<C> inner = series.coeff(i);
        if (inner.order() < n && inner.is_zero()) continue;  // unset entry
        out.set_coeff(i, inner.coeff(n));
    }
    return out;
}

// Formal logarithm of a series with constant term 1, to the same order.
template <ExactRing C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& s) {
    if (s.valuation() < 0 || s.order() < 0 || !(s.coeff(0) == C(1))) {
        throw Error(ErrorKind::BadConstantTerm, "series_log needs constant term 1");
    }
    const int order = s.order();
    TruncatedSeries<C> f = s - TruncatedSeries<C>::constant(C(1), order);
    TruncatedSeries<C> result(order);
    TruncatedSeries<C> power = f;
    for (int k = 1; k <= order; ++k) {
        const BigRational weight(k % 2 == 1 ? 1 : -1, k);
        result += power * weight;
        if (k < order) power = power * f;
    }
    return result;
}

// Formal exponential of a series with zero constant term.
template <ExactRing C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& f) {
    if (f.valuation() < 0 || f.order() < 0 || !f.coeff(0).is_zero()) {
        throw Error(ErrorKind::BadConstantTerm, "series_exp needs constant term 0");
    }
    const int order = f.order();
    TruncatedSeries<C> result = TruncatedSeries<C>::constant(C(1), order);
    TruncatedSeries<C> power = f;
    BigRational factorial(1);
    for (int k = 1; k <= order; ++k) {
        factorial *= BigRational(k);
        result += power * (BigRational(1) / factorial);
        if (k < order) power = power * f;
    }
    return result;
}

// 1 / (1 - c x^m) to the given order.
template <ExactRing C>
TruncatedSeries<C> geometric_series(const C& c, int m, int order) {
    TruncatedSeries<C> s(order);
    C power(1);
    for (int n = 0; n <= order; n += m) {
        s.set_coeff(n, power);
        power = power * c;
    }
    return s;
}

// Multiplicative inverse; the constant term must be a unit of the base ring.
template <ExactRing C>
TruncatedSeries<C> series_inverse(const TruncatedSeries<C>& s) {
    if (s.valuation() < 0 || s.order() < 0 || s.coeff(0).is_zero()) {
        throw Error(ErrorKind::BadConstantTerm, "series_inverse needs a unit constant term");
    }
    const int order = s.order();
    const C inv0 = unit_inverse(s.coeff(0));
    TruncatedSeries<C> r(order);
    r.set_coeff(0, inv0);
    for (int n = 1; n <= order; ++n) {
        C acc{};
        for (int i = 1; i <= n; ++i) {
            const C si = s.coeff(i);
            if (!si.is_zero()) acc = acc + si * r.coeff(n - i);
        }
        r.set_coeff(n, -(acc * inv0));
    }
    return r;
}

}  // namespace motive_forge
