#include "motive_forge/uv_laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "motive_forge/error.hpp"

namespace motive_forge {

namespace {

bool lex_less(const UVLaurent::Term& x, const UVLaurent::Term& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
}

struct Box {
    int amin = std::numeric_limits<int>::max();
    int amax = std::numeric_limits<int>::min();
    int bmin = std::numeric_limits<int>::max();
    int bmax = std::numeric_limits<int>::min();

    long width() const { return static_cast<long>(bmax) - bmin + 1; }
    long area() const { return (static_cast<long>(amax) - amin + 1) * width(); }
    long index(int a, int b) const { return (static_cast<long>(a) - amin) * width() + (b - bmin); }
};

Box box_of(const std::vector<UVLaurent::Term>& terms) {
    Box box;
    for (const auto& t : terms) {
        box.amin = std::min(box.amin, t.a);
        box.amax = std::max(box.amax, t.a);
        box.bmin = std::min(box.bmin, t.b);
        box.bmax = std::max(box.bmax, t.b);
    }
    return box;
}

std::vector<UVLaurent::Term> collect_dense(const Box& box, std::vector<mpq_class>& cells) {
    std::vector<UVLaurent::Term> out;
    for (int a = box.amin; a <= box.amax; ++a) {
        for (int b = box.bmin; b <= box.bmax; ++b) {
            auto& c = cells[box.index(a, b)];
            if (sgn(c) != 0) out.push_back({a, b, BigRational(std::move(c))});
        }
    }
    return out;
}

}  // namespace

UVLaurent::UVLaurent(long constant) {
    if (constant != 0) terms_.push_back({0, 0, BigRational(constant)});
}

UVLaurent::UVLaurent(const BigRational& constant) {
    if (!constant.is_zero()) terms_.push_back({0, 0, constant});
}

UVLaurent UVLaurent::monomial(const BigRational& c, int a, int b) {
    UVLaurent p;
    if (!c.is_zero()) p.terms_.push_back({a, b, c});
    return p;
}

UVLaurent UVLaurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), lex_less);
    UVLaurent p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().a == t.a && p.terms_.back().b == t.b) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
        } else if (!t.c.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool UVLaurent::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].a == 0 && terms_[0].b == 0 && terms_[0].c.is_one();
}

bool UVLaurent::has_integer_coefficients() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.c.is_integer(); });
}

BigRational UVLaurent::coefficient(int a, int b) const {
    const Term key{a, b, {}};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, lex_less);
    if (it != terms_.end() && it->a == a && it->b == b) return it->c;
    return {};
}

int UVLaurent::total_degree() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "total degree of the zero polynomial");
    int best = std::numeric_limits<int>::min();
    for (const auto& t : terms_) best = std::max(best, t.a + t.b);
    return best;
}

int UVLaurent::min_total_degree() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "total degree of the zero polynomial");
    int best = std::numeric_limits<int>::max();
    for (const auto& t : terms_) best = std::min(best, t.a + t.b);
    return best;
}

std::pair<int, int> UVLaurent::u_degree_range() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree range of the zero polynomial");
    const Box box = box_of(terms_);
    return {box.amin, box.amax};
}

std::pair<int, int> UVLaurent::v_degree_range() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree range of the zero polynomial");
    const Box box = box_of(terms_);
    return {box.bmin, box.bmax};
}

UVLaurent UVLaurent::adams(int j) const {
    UVLaurent p = *this;
    for (auto& t : p.terms_) {
        t.a *= j;
        t.b *= j;
    }
    if (j < 0) std::sort(p.terms_.begin(), p.terms_.end(), lex_less);
    return p;
}

BigRational UVLaurent::evaluate(const BigRational& u, const BigRational& v) const {
    auto ipow = [](const BigRational& x, int e) {
        BigRational base = e < 0 ? BigRational(1) / x : x;
        BigRational r(1);
        for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
        return r;
    };
    BigRational sum;
    for (const auto& t : terms_) sum += t.c * ipow(u, t.a) * ipow(v, t.b);
    return sum;
}

void UVLaurent::add_scaled(const UVLaurent& o, int sign) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && lex_less(*i, *j))) {
            out.push_back(std::move(*i++));
        } else if (i == terms_.end() || lex_less(*j, *i)) {
            out.push_back(sign > 0 ? *j : Term{j->a, j->b, -j->c});
            ++j;
        } else {
            BigRational c = sign > 0 ? i->c + j->c : i->c - j->c;
            if (!c.is_zero()) out.push_back({i->a, i->b, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

UVLaurent& UVLaurent::operator+=(const UVLaurent& o) {
    add_scaled(o, +1);
    return *this;
}

UVLaurent& UVLaurent::operator-=(const UVLaurent& o) {
    add_scaled(o, -1);
    return *this;
}

UVLaurent& UVLaurent::operator*=(const UVLaurent& o) {
    *this = *this * o;
    return *this;
}

UVLaurent& UVLaurent::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.c *= s;
    }
    return *this;
}

UVLaurent UVLaurent::operator-() const {
    UVLaurent p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
}

UVLaurent operator*(const UVLaurent& x, const UVLaurent& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (x.terms_.size() == 1 || y.terms_.size() == 1) {
        const auto& mono = x.terms_.size() == 1 ? x.terms_[0] : y.terms_[0];
        const auto& poly = x.terms_.size() == 1 ? y : x;
        UVLaurent p;
        p.terms_.reserve(poly.terms_.size());
        for (const auto& t : poly.terms_) p.terms_.push_back({t.a + mono.a, t.b + mono.b, t.c * mono.c});
        return p;
    }
    const Box bx = box_of(x.terms_);
    const Box by = box_of(y.terms_);
    const Box box{bx.amin + by.amin, bx.amax + by.amax, bx.bmin + by.bmin, bx.bmax + by.bmax};
    const long pairs = static_cast<long>(x.terms_.size()) * static_cast<long>(y.terms_.size());
    if (box.area() <= 4 * pairs + 256) {
        std::vector<mpq_class> cells(static_cast<std::size_t>(box.area()));
        mpq_class prod;
        for (const auto& s : x.terms_) {
            for (const auto& t : y.terms_) {
                mpq_mul(prod.get_mpq_t(), s.c.raw().get_mpq_t(), t.c.raw().get_mpq_t());
                auto& cell = cells[box.index(s.a + t.a, s.b + t.b)];
                cell += prod;
            }
        }
        UVLaurent p;
        p.terms_ = collect_dense(box, cells);
        return p;
    }
    std::vector<UVLaurent::Term> raw;
    raw.reserve(static_cast<std::size_t>(pairs));
    for (const auto& s : x.terms_) {
        for (const auto& t : y.terms_) raw.push_back({s.a + t.a, s.b + t.b, s.c * t.c});
    }
    return UVLaurent::from_terms(std::move(raw));
}

std::string UVLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool negative = it->c.sign() < 0;
        const BigRational mag = negative ? -it->c : it->c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool constant = it->a == 0 && it->b == 0;
        bool need_star = false;
        if (!mag.is_one() || constant) {
            os << mag.to_string();
            need_star = true;
        }
        auto emit = [&](char var, int e) {
            if (e == 0) return;
            if (need_star) os << '*';
            os << var;
            if (e != 1) os << '^' << e;
            need_star = true;
        };
        emit('u', it->a);
        emit('v', it->b);
    }
    return os.str();
}

UVLaurent UVLaurent::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial text");
    if (s == "0") return {};
    std::vector<Term> terms;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, why + " in '" + std::string(text) + "'");
    };
    auto read_int = [&]() {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
            fail("expected integer");
        }
        return s.substr(start, pos - start);
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!terms.empty()) {
            fail("expected '+' or '-'");
        }
        Term term{0, 0, BigRational(sign)};
        bool have_factor = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (have_factor) {
                if (s[pos] != '*') fail("expected '*'");
                ++pos;
            }
            if (pos < s.size() && (s[pos] == 'u' || s[pos] == 'v')) {
                const char var = s[pos++];
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = std::stoi(read_int());
                }
                (var == 'u' ? term.a : term.b) += e;
            } else {
                std::string num = read_int();
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    num += "/" + read_int();
                }
                term.c *= BigRational::parse(num);
            }
            have_factor = true;
        }
        if (!have_factor) fail("dangling sign");
        terms.push_back(std::move(term));
    }
    return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const UVLaurent& p) { return os << p.to_string(); }

UVLaurent exact_divide(const UVLaurent& num, const UVLaurent& den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "exact_divide by zero");
    if (num.is_zero()) return {};
    const auto& dt = den.terms();
    if (dt.size() == 1) {
        UVLaurent q;
        std::vector<UVLaurent::Term> out;
        out.reserve(num.terms().size());
        for (const auto& t : num.terms()) out.push_back({t.a - dt[0].a, t.b - dt[0].b, t.c / dt[0].c});
        return UVLaurent::from_terms(std::move(out));
    }
    const Box nb = box_of(num.terms());
    const Box db = box_of(dt);
    // Every quotient monomial lies in this box; anything outside proves inexactness.
    const Box qb{nb.amin - db.amin, nb.amax - db.amax, nb.bmin - db.bmin, nb.bmax - db.bmax};
    if (qb.amin > qb.amax || qb.bmin > qb.bmax) {
        throw Error(ErrorKind::NotDivisible, "degree box of quotient is empty");
    }
    std::vector<mpq_class> rem(static_cast<std::size_t>(nb.area()));
    for (const auto& t : num.terms()) rem[nb.index(t.a, t.b)] = t.c.raw();
    const auto& lead = dt.back();  // lex-largest term of den
    std::vector<UVLaurent::Term> quotient;
    mpq_class c;
    mpq_class prod;
    for (int a = nb.amax; a >= nb.amin; --a) {
        for (int b = nb.bmax; b >= nb.bmin; --b) {
            auto& cell = rem[nb.index(a, b)];
            if (sgn(cell) == 0) continue;
            const int qa = a - lead.a;
            const int qbv = b - lead.b;
            if (qa < qb.amin || qa > qb.amax || qbv < qb.bmin || qbv > qb.bmax) {
                throw Error(ErrorKind::NotDivisible,
                            "no exact quotient for " + num.to_string() + " / " + den.to_string());
            }
            mpq_div(c.get_mpq_t(), cell.get_mpq_t(), lead.c.raw().get_mpq_t());
            for (const auto& t : dt) {
                mpq_mul(prod.get_mpq_t(), c.get_mpq_t(), t.c.raw().get_mpq_t());
                rem[nb.index(qa + t.a, qbv + t.b)] -= prod;
            }
            quotient.push_back({qa, qbv, BigRational(c)});
        }
    }
    return UVLaurent::from_terms(std::move(quotient));
}

int laurent_total_degree(const UVLaurent& f) { return f.total_degree(); }

UVLaurent pow(const UVLaurent& base, int exponent) {
    if (exponent < 0) {
        if (!base.is_monomial()) {
            throw Error(ErrorKind::NotDivisible, "negative power of a non-monomial " + base.to_string());
        }
        const auto& t = base.terms()[0];
        return pow(UVLaurent::monomial(BigRational(1) / t.c, -t.a, -t.b), -exponent);
    }
    UVLaurent result(1);
    UVLaurent sq = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= sq;
        if (e > 1) sq *= sq;
    }
    return result;
}

}  // namespace motive_forge
