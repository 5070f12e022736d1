#ifndef TANALG_RATIONAL_HPP
#define TANALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tanalg {

// Exact rational scalar. Invariants (maintained by GMP): denominator > 0,
// fraction in lowest terms. Arithmetic never rounds.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, enables 2 * f
    Rational(long num, long den);

    // Accepts "p" or "p/q" with optional leading '-'. Throws ParseError.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws DomainError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }

    // "p" when the denominator is 1, else "p/q".
    std::string str() const;

    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

Rational abs(const Rational& a);

} // namespace tanalg

#endif
