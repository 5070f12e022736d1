#include "tanalg/rational.hpp"

#include <utility>

#include "tanalg/errors.hpp"

namespace tanalg {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(text)));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (sgn(den) == 0) throw DomainError("rational with zero denominator: " + text);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: " + text, 0, 1, 1);
    }
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-q_));
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
}

} // namespace tanalg
