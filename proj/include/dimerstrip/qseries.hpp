#pragma once

#include <map>
#include <string>

#include "dimerstrip/rational.hpp"

namespace dimerstrip {

// Exact polynomial in the nome q with integer coefficients and rational
// exponents. Exponent denominators are restricted to divisors of 24, which
// covers every exponent generated by the character formulas; the bound is
// asserted at insertion so a drifting exponent is caught immediately.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(long long c) {
        if (c != 0) terms_[Rational(0)] = c;
    }

    static QSeries zero() { return QSeries(); }
    static QSeries one() { return QSeries(1); }
    // c * q^e
    static QSeries monomial(long long c, const Rational& e);

    const std::map<Rational, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(const Rational& e) const;

    void add_term(const Rational& e, long long c);

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(long long c) const;
    bool operator==(const QSeries& o) const { return terms_ == o.terms_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    // Multiply by q^e.
    QSeries shifted(const Rational& e) const;

    // Exact division; throws std::domain_error on a nonzero remainder.
    // A failed division signals a transcription bug, never data.
    QSeries divide_exact(const QSeries& divisor) const;

    // Drop all terms with exponent > cutoff.
    QSeries truncated(const Rational& cutoff) const;

    long long eval_at_one() const;
    double eval(double q) const;

    Rational min_exponent() const;
    Rational max_exponent() const;

    // "coeff*q^(p/r)" terms joined by '+', exponent-ascending; "0" when empty.
    std::string str() const;

private:
    std::map<Rational, long long> terms_;
};

inline QSeries operator*(long long c, const QSeries& s) { return s * c; }

std::ostream& operator<<(std::ostream& os, const QSeries& s);

}  // namespace dimerstrip
