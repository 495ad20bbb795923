#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lie3 {

using Rational = mpq_class;

/// Raised on division by zero in the coefficient field.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An element a + b*q of Q(q), where q is a primitive cube root of unity
/// (q^2 = -1 - q). Always held in the canonical {1, q} coordinates.
class CycQ {
public:
    CycQ() = default;
    CycQ(long v) : a_(v) {}  // NOLINT: implicit from integers is intended
    CycQ(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    CycQ(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static CycQ q() { return CycQ(0, 1); }

    const Rational& re() const { return a_; }   // coefficient of 1
    const Rational& qc() const { return b_; }   // coefficient of q

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    CycQ operator-() const { return CycQ(-a_, -b_); }
    CycQ& operator+=(const CycQ& o);
    CycQ& operator-=(const CycQ& o);
    CycQ& operator*=(const CycQ& o);
    CycQ& operator/=(const CycQ& o);

    friend CycQ operator+(CycQ x, const CycQ& y) { return x += y; }
    friend CycQ operator-(CycQ x, const CycQ& y) { return x -= y; }
    friend CycQ operator*(CycQ x, const CycQ& y) { return x *= y; }
    friend CycQ operator/(CycQ x, const CycQ& y) { return x /= y; }

    /// Image under q -> q^2 (the Galois conjugation).
    CycQ conj() const;
    /// x * conj(x) = a^2 - ab + b^2, a rational.
    Rational norm() const;
    CycQ inv() const;

    friend bool operator==(const CycQ& x, const CycQ& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Arbitrary total order (lexicographic on coordinates), for containers.
    friend bool operator<(const CycQ& x, const CycQ& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    /// Renders "a", "b*q" or "a+b*q" ("a-b*q" when b < 0); rationals as p/r.
    std::string str() const;
    /// Parses the grammar produced by str(); also accepts whitespace and a
    /// leading '+'. Throws std::invalid_argument on malformed input.
    static CycQ parse(std::string_view text);

private:
    Rational a_{0};
    Rational b_{0};
};

/// q^k for any integer k; q^3 = 1.
CycQ q_pow(long k);

std::ostream& operator<<(std::ostream& os, const CycQ& x);

/// Renders a rational as "p" or "p/r".
std::string rational_str(const Rational& r);

}  // namespace lie3
