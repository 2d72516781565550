#include "dimerstrip/qcombi.hpp"

#include <algorithm>
#include <stdexcept>

namespace dimerstrip {

bool DoubleColumnDiagram::admissible() const {
    if (left.size() > right.size()) return false;
    std::vector<int> l = left, r = right;
    std::sort(l.rbegin(), l.rend());
    std::sort(r.rbegin(), r.rend());
    // Pair occupied sites from the top down; the left column is padded so a
    // surplus right site can pair with anything below it.
    for (std::size_t j = 0; j < l.size(); ++j)
        if (l[j] > r[j]) return false;
    return true;
}

long long DoubleColumnDiagram::energy() const {
    long long e = 0;
    for (int j : left) e += j;
    for (int j : right) e += j;
    return e;
}

std::vector<int> DoubleColumnDiagram::content() const {
    std::vector<int> n(big_m, 0);
    for (int j : left) n[j - 1] += 1;
    for (int j : right) n[j - 1] += 1;
    return n;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int big_m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        if (big_m - next + 1 < k - int(cur.size())) return;
        for (int j = next; j <= big_m; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

std::vector<DoubleColumnDiagram> admissible_diagrams(int big_m, int m, int n) {
    std::vector<DoubleColumnDiagram> out;
    if (m < 0 || n < 0 || m > big_m || n > big_m) return out;
    for (const auto& l : subsets_of_size(big_m, m))
        for (const auto& r : subsets_of_size(big_m, n)) {
            DoubleColumnDiagram d{big_m, l, r};
            if (d.admissible()) out.push_back(d);
        }
    return out;
}

QSeries q_binomial(int big_m, int m) {
    if (m < 0 || m > big_m) return QSeries::zero();
    // Pascal recurrence [M m] = [M-1 m-1] + q^m [M-1 m]
    std::vector<QSeries> row(m + 1);
    row[0] = QSeries::one();
    for (int big = 1; big <= big_m; ++big) {
        for (int k = std::min(big, m); k >= 1; --k) {
            QSeries upper = (k <= big - 1) ? row[k] : QSeries::zero();
            row[k] = row[k - 1] + upper.shifted(Rational(k));
        }
    }
    return row[m];
}

QSeries skew_q_binomial(int big_m, int m, int n, SkewMethod method) {
    if (m > n) throw std::domain_error("skew_q_binomial: requires m <= n");
    if (m < 0 || n > big_m) throw std::domain_error("skew_q_binomial: out of range");
    switch (method) {
        case SkewMethod::closed_form: {
            QSeries first = q_binomial(big_m, m) * q_binomial(big_m, n);
            QSeries second = q_binomial(big_m, m - 1) * q_binomial(big_m, n + 1);
            return first - second.shifted(Rational(n - m + 1));
        }
        case SkewMethod::diagrams: {
            // Narayana sum with the q^{m(m+1)/2 + n(n+1)/2} prefactor removed
            QSeries sum;
            Rational pref(-(long long)m * (m + 1) / 2 - (long long)n * (n + 1) / 2);
            for (const auto& d : admissible_diagrams(big_m, m, n))
                sum.add_term(pref + Rational(d.energy()), 1);
            return sum;
        }
        case SkewMethod::young: {
            // q^{(m-n)n} sum over pairs: Y1 inside the (M-m) x m box, Y2
            // between the (n-m) x n rectangle and the (M-m) x n box, Y1
            // inside Y2, weighted by the total box count of the pair.
            auto partitions_in_box = [](int rows, int width) {
                std::vector<std::vector<int>> parts;
                std::vector<int> cur;
                auto rec = [&](auto&& self, int row, int maxw) -> void {
                    parts.push_back(cur);
                    if (row >= rows) return;
                    for (int wdt = maxw; wdt >= 1; --wdt) {
                        cur.push_back(wdt);
                        self(self, row + 1, wdt);
                        cur.pop_back();
                    }
                };
                if (rows > 0) rec(rec, 0, width);
                else parts.push_back({});
                return parts;
            };
            auto contains = [](const std::vector<int>& outer, const std::vector<int>& inner) {
                if (inner.size() > outer.size()) return false;
                for (std::size_t i = 0; i < inner.size(); ++i)
                    if (inner[i] > outer[i]) return false;
                return true;
            };
            auto boxes = [](const std::vector<int>& p) {
                long long b = 0;
                for (int x : p) b += x;
                return b;
            };
            std::vector<int> rect(n - m, n);  // the (n-m) x n rectangle
            QSeries sum;
            Rational pref((long long)(m - n) * n);
            for (const auto& y1 : partitions_in_box(big_m - m, m))
                for (const auto& y2 : partitions_in_box(big_m - m, n)) {
                    if (!contains(y2, rect)) continue;
                    if (!contains(y2, y1)) continue;
                    sum.add_term(pref + Rational(boxes(y1) + boxes(y2)), 1);
                }
            return sum;
        }
    }
    throw std::logic_error("unreachable");
}

QSeries q_narayana(int big_m, int m, int n) {
    Rational pref((long long)m * (m + 1) / 2 + (long long)n * (n + 1) / 2);
    return skew_q_binomial(big_m, m, n).shifted(pref);
}

QSeries q_catalan(int big_m, int r, CatalanKind kind) {
    if (r < 1) throw std::domain_error("q_catalan: r >= 1 required");
    QSeries sum;
    for (int m = 0; m + r - 1 <= big_m; ++m) {
        QSeries nara = q_narayana(big_m, m, m + r - 1);
        if (kind == CatalanKind::odd) {
            sum = sum + nara;
        } else {
            sum = sum + nara.shifted(Rational(-m) + Rational(-(r - 1), 2));
        }
    }
    QSeries closed;
    if (kind == CatalanKind::odd) {
        QSeries num = (QSeries::one() - QSeries::monomial(1, Rational(r))) *
                      q_binomial(2 * big_m + 2, big_m + 1 - r);
        QSeries den = QSeries::one() - QSeries::monomial(1, Rational(big_m + 1));
        closed = num.divide_exact(den).shifted(Rational((long long)r * (r - 1), 2));
    } else {
        QSeries num = (QSeries::one() - QSeries::monomial(1, Rational(2 * r))) *
                      q_binomial(2 * big_m + 1, big_m + 1 - r);
        QSeries den = QSeries::one() - QSeries::monomial(1, Rational(big_m + r + 1));
        closed = num.divide_exact(den).shifted(
            Rational((long long)(r - 1) * (r - 1), 2));
    }
    if (!(sum == closed))
        throw std::domain_error("q_catalan: Narayana sum and closed form disagree");
    return closed;
}

QSeries irreducible_character_finitized(int big_m, int r, CatalanKind kind) {
    QSeries cat = q_catalan(big_m, r, kind);
    Rational pref(1, 12);  // -c/24 with c = -2
    if (kind == CatalanKind::even) pref = pref - Rational(1, 8);
    return cat.shifted(pref);
}

std::vector<std::vector<int>> selection_matrix(int big_n, int s) {
    if ((big_n + s) % 2 == 0)
        throw std::domain_error("selection_matrix: N + s must be odd");
    if (s < 1 || s > big_n + 1) throw std::domain_error("selection_matrix: bad s");
    int size = (big_n + 1) / 2;
    std::vector<std::vector<int>> a(size, std::vector<int>(size, 0));
    int k = s / 2;  // s = 2k+1 (odd) or s = 2k (even)
    for (int m = 0; m < size; ++m)
        for (int n = m; n < size; ++n) {
            int diff = n - m;
            if (s % 2 == 1) {
                if (diff > k - 1) a[m][n] = 2;
                else if (diff == k - 1) a[m][n] = 1;
            } else {
                if (diff >= k - 1) a[m][n] = 1;
            }
        }
    return a;
}

Rational conformal_weight(int s) {
    long long t = 2 - s;
    return Rational(t * t - 1, 8);
}

Rational character_prefactor(int s) { return Rational(1, 12) + conformal_weight(s); }

QSeries character_closed_form(int big_n, int s) {
    if ((big_n + s) % 2 == 0)
        throw std::domain_error("character_closed_form: N + s must be odd");
    QSeries num = (QSeries::one() + QSeries::monomial(1, Rational(s - 1, 2))) *
                  q_binomial(big_n, (big_n + s - 1) / 2);
    QSeries den = QSeries::one() + QSeries::monomial(1, Rational(big_n, 2));
    return num.divide_exact(den).shifted(character_prefactor(s));
}

QSeries narayana_decomposition(int big_n, int s) {
    auto a = selection_matrix(big_n, s);
    int big_m = (big_n - 1) / 2;
    // Prefactor q^{-c/24 + Delta_1} for s odd, q^{-c/24 + Delta_2} for s
    // even; the remaining s dependence lives in the selection matrix.
    Rational pref = Rational(1, 12) + conformal_weight(s % 2 == 1 ? 1 : 2);
    QSeries sum;
    for (int m = 0; m <= big_m; ++m)
        for (int n = m; n <= big_m; ++n) {
            if (a[m][n] == 0) continue;
            QSeries nara = q_narayana(big_m, m, n);
            if (s % 2 == 0) nara = nara.shifted(Rational(-(long long)(m + n), 2));
            sum = sum + nara * a[m][n];
        }
    return sum.shifted(pref);
}

QSeries catalan_decomposition(int big_n, int s) {
    auto a = selection_matrix(big_n, s);
    int big_m = (big_n - 1) / 2;
    int rmax = (big_n + 1) / 2;
    QSeries sum;
    // The r-sum cap floor((N+1)/2) always equals M+1, so the last diagonal
    // r = M+1 consists of the single Narayana number <M; 0, M> and the
    // q-Catalan range r <= M+1 is never exceeded.
    if (rmax != big_m + 1)
        throw std::logic_error("catalan_decomposition: diagonal count mismatch");
    for (int r = 1; r <= rmax; ++r) {
        int coeff = a[0][r - 1];  // first row of the selection matrix
        if (coeff == 0) continue;
        CatalanKind kind = (s % 2 == 1) ? CatalanKind::odd : CatalanKind::even;
        sum = sum + irreducible_character_finitized(big_m, r, kind) * coeff;
    }
    return sum;
}

QSeries irreducible_character_limit(int r, const Rational& order) {
    long long cap = order.num() / order.den() + 2;
    if (cap < 2) cap = 2;
    QSeries euler = QSeries::one();
    for (long long k = 1; k <= cap; ++k) {
        QSeries geom;
        for (long long j = 0; k * j <= cap; ++j) geom.add_term(Rational(k * j), 1);
        euler = (euler * geom).truncated(Rational(cap));
    }
    QSeries head = QSeries::one() - QSeries::monomial(1, Rational(r));
    Rational pref = Rational(1, 12) + Rational((long long)r * (r - 1), 2);
    return (euler * head).truncated(order - pref).shifted(pref).truncated(order);
}

std::vector<RefinedMultiplicity> character_refinement(int s, int r_max) {
    if (s % 2 == 0) throw std::domain_error("character_refinement: s must be odd");
    std::vector<RefinedMultiplicity> out;
    for (int r = 1; r <= r_max; ++r) {
        RefinedMultiplicity m;
        m.r = r;
        if (s == 1) {
            m.multiplicity = 2;
            m.jordan_paired = (r % 2 == 1);
        } else {
            int first = (s - 1) / 2;
            if (r < first) continue;
            if (r == first) {
                m.multiplicity = 1;
            } else {
                m.multiplicity = 2;
                m.jordan_paired = ((r - (s + 1) / 2) % 2 == 0);
            }
        }
        out.push_back(m);
    }
    return out;
}

QSeries character_limit_truncation(int s, const Rational& order) {
    // 1/(q)_infty as the partition generating function, truncated at `order`.
    long long cap = order.num() / order.den() + 2;
    if (cap < 2) cap = 2;
    QSeries euler = QSeries::one();
    for (long long k = 1; k <= cap; ++k) {
        QSeries geom;
        for (long long j = 0; k * j <= cap; ++j) geom.add_term(Rational(k * j), 1);
        euler = (euler * geom).truncated(Rational(cap));
    }
    QSeries head = QSeries::one() + QSeries::monomial(1, Rational(s - 1, 2));
    QSeries res = (euler * head).truncated(order - character_prefactor(s));
    return res.shifted(character_prefactor(s)).truncated(order);
}

}  // namespace dimerstrip
