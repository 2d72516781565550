#include "dimerstrip/qseries.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dimerstrip {

namespace {
void check_exponent(const Rational& e) {
    if (24 % e.den() != 0)
        throw std::invalid_argument("QSeries: exponent denominator " +
                                    std::to_string(e.den()) + " does not divide 24");
}
}  // namespace

QSeries QSeries::monomial(long long c, const Rational& e) {
    QSeries s;
    s.add_term(e, c);
    return s;
}

long long QSeries::coeff(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void QSeries::add_term(const Rational& e, long long c) {
    if (c == 0) return;
    check_exponent(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QSeries QSeries::operator*(long long c) const {
    QSeries r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

QSeries QSeries::shifted(const Rational& e) const {
    QSeries r;
    for (const auto& [e0, c] : terms_) r.add_term(e0 + e, c);
    return r;
}

QSeries QSeries::divide_exact(const QSeries& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("QSeries: division by zero");
    QSeries rem = *this;
    QSeries quot;
    // Divide from the top so a nonzero remainder terminates the loop once
    // its degree drops below the divisor's leading term.
    const auto& [de, dc] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        if (re < de || rc % dc != 0)
            throw std::domain_error("QSeries: non-exact division");
        long long qc = rc / dc;
        Rational qe = re - de;
        quot.add_term(qe, qc);
        rem = rem - divisor.shifted(qe) * qc;
    }
    return quot;
}

QSeries QSeries::truncated(const Rational& cutoff) const {
    QSeries r;
    for (const auto& [e, c] : terms_) {
        if (e <= cutoff) r.terms_[e] = c;
    }
    return r;
}

long long QSeries::eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

double QSeries::eval(double q) const {
    double s = 0;
    for (const auto& [e, c] : terms_) s += double(c) * std::pow(q, e.to_double());
    return s;
}

Rational QSeries::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("QSeries: min_exponent of zero");
    return terms_.begin()->first;
}

Rational QSeries::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("QSeries: max_exponent of zero");
    return terms_.rbegin()->first;
}

std::string QSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << "+";
        first = false;
        os << c << "*q^(" << e.str() << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.str(); }

}  // namespace dimerstrip
