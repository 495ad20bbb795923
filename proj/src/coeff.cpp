#include "lie3/coeff.hpp"

#include <cctype>
#include <ostream>

namespace lie3 {

CycQ& CycQ::operator+=(const CycQ& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

CycQ& CycQ::operator-=(const CycQ& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

// (a + bq)(c + dq) = ac + (ad + bc)q + bd q^2, and q^2 = -1 - q.
CycQ& CycQ::operator*=(const CycQ& o) {
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ - bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

CycQ& CycQ::operator/=(const CycQ& o) { return *this *= o.inv(); }

CycQ CycQ::conj() const { return CycQ(a_ - b_, -b_); }

Rational CycQ::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

CycQ CycQ::inv() const {
    if (is_zero()) throw DivisionByZero("CycQ: division by zero");
    Rational n = norm();
    CycQ c = conj();
    return CycQ(c.a_ / n, c.b_ / n);
}

CycQ q_pow(long k) {
    long r = ((k % 3) + 3) % 3;
    if (r == 0) return CycQ(1);
    if (r == 1) return CycQ::q();
    return CycQ(-1, -1);
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string CycQ::str() const {
    if (sgn(b_) == 0) return rational_str(a_);
    std::string qpart;
    Rational mag = abs(b_);
    if (mag == 1)
        qpart = "q";
    else
        qpart = rational_str(mag) + "*q";
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + qpart;
    return rational_str(a_) + (sgn(b_) < 0 ? "-" : "+") + qpart;
}

std::ostream& operator<<(std::ostream& os, const CycQ& x) { return os << x.str(); }

namespace {

struct ScalarParser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("invalid coefficient '" + std::string(s) + "' at column " +
                                    std::to_string(pos + 1) + ": " + what);
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_digit() {
        skip();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
    Rational number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        mpz_class num(std::string(s.substr(start, pos - start)));
        mpz_class den(1);
        if (eat('/')) {
            skip();
            std::size_t ds = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (ds == pos) fail("expected a denominator");
            den = mpz_class(std::string(s.substr(ds, pos - ds)));
            if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    // term := number ('*' 'q')? | 'q'
    CycQ term() {
        skip();
        if (eat('q')) return CycQ::q();
        Rational r = number();
        if (eat('*')) {
            if (!eat('q')) fail("expected 'q' after '*'");
            return CycQ(0, r);
        }
        return CycQ(r);
    }
};

}  // namespace

CycQ CycQ::parse(std::string_view text) {
    ScalarParser p{text};
    CycQ acc;
    bool first = true;
    for (;;) {
        p.skip();
        if (p.pos >= text.size()) {
            if (first) p.fail("empty");
            break;
        }
        int sign = 1;
        if (p.eat('-'))
            sign = -1;
        else if (!p.eat('+') && !first)
            p.fail("expected '+' or '-'");
        CycQ t = p.term();
        acc += sign < 0 ? -t : t;
        first = false;
    }
    return acc;
}

}  // namespace lie3
