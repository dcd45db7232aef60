#include "motive_forge/big_rational.hpp"

#include <ostream>

#include "motive_forge/error.hpp"

namespace motive_forge {

BigRational::BigRational(long num, long den) : q_(num, den) {
    if (den == 0) {
        throw Error(ErrorKind::NotDivisible, "zero denominator in rational literal");
    }
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) {
        throw Error(ErrorKind::ParseError, "empty rational literal");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw Error(ErrorKind::ParseError, "malformed rational literal '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return BigRational(std::move(q));
}

std::string BigRational::to_string() const { return q_.get_str(10); }

mpz_class BigRational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class BigRational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw Error(ErrorKind::NotDivisible, "division of rational by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigRational pow(const BigRational& base, int exponent) {
    if (exponent < 0) return pow(BigRational(1) / base, -exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(mpq_class(num, den));
}

long floor_div(long num, long den) {
    long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

long ceil_div(long num, long den) { return -floor_div(-num, den); }

}  // namespace motive_forge
