#pragma once

// Small random generators for property tests. Deterministic per seed.

#include <cstdint>
#include <random>
#include <vector>

#include "motive_forge/big_rational.hpp"
#include "motive_forge/uv_laurent.hpp"

namespace testing_support {

using motive_forge::BigRational;
using motive_forge::UVLaurent;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    BigRational rational(int bound = 30) {
        const int num = integer(-bound, bound);
        const int den = integer(1, bound);
        return BigRational(num, den);
    }

    BigRational nonzero_rational(int bound = 30) {
        BigRational q;
        while (q.is_zero()) q = rational(bound);
        return q;
    }

    UVLaurent laurent(int terms = 4, int lo = -2, int hi = 3) {
        std::vector<UVLaurent::Term> t;
        for (int i = 0; i < terms; ++i) t.push_back({integer(lo, hi), integer(lo, hi), rational()});
        return UVLaurent::from_terms(std::move(t));
    }

    UVLaurent nonzero_laurent(int terms = 3, int lo = -1, int hi = 2) {
        UVLaurent p;
        while (p.is_zero()) p = laurent(terms, lo, hi);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
