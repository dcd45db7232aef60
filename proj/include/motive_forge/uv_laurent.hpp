#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "motive_forge/big_rational.hpp"

namespace motive_forge {

// Laurent polynomial in the Hodge variables u, v with exact rational
// coefficients. Terms are stored sorted by (a, b) ascending with no zero
// coefficients, so structural equality is value equality.
class UVLaurent {
public:
    struct Term {
        int a = 0;  // exponent of u
        int b = 0;  // exponent of v
        BigRational c;

        friend bool operator==(const Term&, const Term&) = default;
    };

    UVLaurent() = default;
    UVLaurent(long constant);  // NOLINT(google-explicit-constructor)
    UVLaurent(const BigRational& constant);  // NOLINT(google-explicit-constructor)

    static UVLaurent monomial(const BigRational& c, int a, int b);
    static UVLaurent u() { return monomial(1, 1, 0); }
    static UVLaurent v() { return monomial(1, 0, 1); }
    static UVLaurent from_terms(std::vector<Term> terms);

    // Inverse of to_string(); accepts any term order and repeated monomials.
    static UVLaurent parse(std::string_view text);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool has_integer_coefficients() const noexcept;

    BigRational coefficient(int a, int b) const;

    // Max of a+b over stored terms; throws ZeroPolynomial on 0.
    int total_degree() const;
    int min_total_degree() const;
    std::pair<int, int> u_degree_range() const;
    std::pair<int, int> v_degree_range() const;

    // u -> u^j, v -> v^j.
    UVLaurent adams(int j) const;
    // Value at numeric (u, v); negative exponents need nonzero arguments.
    BigRational evaluate(const BigRational& u, const BigRational& v) const;

    UVLaurent& operator+=(const UVLaurent& o);
    UVLaurent& operator-=(const UVLaurent& o);
    UVLaurent& operator*=(const UVLaurent& o);
    UVLaurent& operator*=(const BigRational& s);

    friend UVLaurent operator+(UVLaurent a, const UVLaurent& b) { return a += b; }
    friend UVLaurent operator-(UVLaurent a, const UVLaurent& b) { return a -= b; }
    friend UVLaurent operator*(const UVLaurent& a, const UVLaurent& b);
    friend UVLaurent operator*(UVLaurent a, const BigRational& s) { return a *= s; }
    friend UVLaurent operator*(const BigRational& s, UVLaurent a) { return a *= s; }
    UVLaurent operator-() const;

    friend bool operator==(const UVLaurent&, const UVLaurent&) = default;

    // Canonical text: terms by (a, b) descending, e.g. "-3/2*u^2*v^-1 + 1".
    std::string to_string() const;

private:
    void add_scaled(const UVLaurent& o, int sign);

    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const UVLaurent& p);

// q with q * den == num exactly; NotDivisible when no Laurent-polynomial
// quotient exists, ZeroPolynomial when den == 0.
UVLaurent exact_divide(const UVLaurent& num, const UVLaurent& den);

int laurent_total_degree(const UVLaurent& f);

UVLaurent pow(const UVLaurent& base, int exponent);

}  // namespace motive_forge
