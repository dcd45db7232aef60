#pragma once

#include <concepts>
#include <string>

#include "motive_forge/big_rational.hpp"
#include "motive_forge/error.hpp"
#include "motive_forge/uv_laurent.hpp"

namespace motive_forge {

// Coefficient types usable in series and t-rational functions: exact
// commutative rings with a rational scalar action. Default construction is 0.
template <class C>
concept ExactRing = std::regular<C> && requires(C a, const C b, const BigRational& q) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -b } -> std::convertible_to<C>;
    { b * q } -> std::convertible_to<C>;
    { b.is_zero() } -> std::convertible_to<bool>;
};

// Realization base rings: the values atoms, L and classes take.
template <class R>
concept BaseRing = ExactRing<R> && requires(const R a, int e) {
    { a.is_one() } -> std::convertible_to<bool>;
    { pow(a, e) } -> std::convertible_to<R>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

inline BigRational exact_quotient(const BigRational& num, const BigRational& den) { return num / den; }
inline UVLaurent exact_quotient(const UVLaurent& num, const UVLaurent& den) { return exact_divide(num, den); }

inline BigRational unit_inverse(const BigRational& x) { return BigRational(1) / x; }
inline UVLaurent unit_inverse(const UVLaurent& x) { return pow(x, -1); }

}  // namespace motive_forge
