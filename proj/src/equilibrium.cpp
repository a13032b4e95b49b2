#include "ope/equilibrium.hpp"

#include <stdexcept>

#include "ope/hypergeometric.hpp"
#include "ope/randomised.hpp"

namespace ope {

Rational arcsine_uniform_monomial(unsigned long j, unsigned long m) {
    if (j % 2 == 1) return Rational(0);
    return binomial(static_cast<long>(j), static_cast<long>(j / 2)) /
           pow(Rational(2), static_cast<long>(j)) / Rational(static_cast<long>(m) + 1);
}

Rational charlier_eq_moment(const Rational& h, unsigned long k) {
    if (h == 0) throw std::invalid_argument("h must be nonzero");
    Rational mk(-static_cast<long>(k));
    return pow(h, static_cast<long>(k)) *
           pfq_terminating({{mk, mk}, {Rational(2)}, Rational(1) / h});
}

Rational charlier_eq_moment_oracle(const Rational& h, unsigned long k) {
    // (u + 2 sqrt(uh) s + h)^k expanded; j = power of the arcsine term
    Rational total(0);
    Integer kfact = factorial(k);
    for (unsigned long j = 0; j <= k; j += 2) {
        for (unsigned long l = 0; l + j <= k; ++l) {
            Rational coeff = Rational(kfact) /
                             Rational(factorial(j) * factorial(l) * factorial(k - j - l));
            total += coeff * pow(Rational(2), static_cast<long>(j)) *
                     pow(h, static_cast<long>(k - j / 2 - l)) *
                     arcsine_uniform_monomial(j, l + j / 2);
        }
    }
    return total;
}

Rational meixner1_eq_moment(const Rational& q, unsigned long k) {
    if (q <= 0 || q >= 1) throw std::invalid_argument("need q in (0,1)");
    Rational mk(-static_cast<long>(k));
    return pow(q / (Rational(1) - q), static_cast<long>(k)) /
           Rational(static_cast<long>(k) + 1) *
           pfq_terminating({{mk, mk}, {Rational(1)}, Rational(1) / q});
}

Rational meixner1_eq_moment_oracle(const Rational& q, unsigned long k) {
    if (q <= 0 || q >= 1) throw std::invalid_argument("need q in (0,1)");
    // E[U^k] * E[(1+q+2 sqrt(q) s)^k] / (1-q)^k
    Rational angular(0);
    for (unsigned long j = 0; j <= k; j += 2)
        angular += binomial(static_cast<long>(k), static_cast<long>(j)) *
                   pow(Rational(1) + q, static_cast<long>(k - j)) *
                   pow(Rational(2), static_cast<long>(j)) * pow(q, static_cast<long>(j / 2)) *
                   arcsine_uniform_monomial(j, 0);
    return angular / Rational(static_cast<long>(k) + 1) /
           pow(Rational(1) - q, static_cast<long>(k));
}

Rational meixner_general_eq_moment(const Rational& q, const Rational& c, unsigned long k) {
    if (q <= 0 || q >= 1) throw std::invalid_argument("need q in (0,1)");
    if (c < 0) throw std::invalid_argument("need c >= 0");
    Rational total(0);
    Integer kfact = factorial(k);
    for (unsigned long j = 0; 2 * j <= k; ++j) {
        for (unsigned long l = 0; l + 2 * j <= k; ++l) {
            for (unsigned long m = 0; m <= j; ++m) {
                Rational denom(factorial(l) * factorial(j) * factorial(m) * factorial(j - m) *
                               factorial(k - 2 * j - l));
                denom *= Rational(static_cast<long>(k - m - l) + 1);
                total += Rational(kfact) * pow(c, static_cast<long>(l + m)) / denom *
                         pow(q, static_cast<long>(j + l)) /
                         pow(Rational(1) + q, static_cast<long>(2 * j + l));
            }
        }
    }
    return total * pow((Rational(1) + q) / (Rational(1) - q), static_cast<long>(k));
}

Rational meixner_general_eq_moment_oracle(const Rational& q, const Rational& c, unsigned long k) {
    if (q <= 0 || q >= 1) throw std::invalid_argument("need q in (0,1)");
    if (c < 0) throw std::invalid_argument("need c >= 0");
    // (u + 2 sqrt(q u (c+u)) s + q(c+u))^k with the (c+u) powers expanded;
    // a deliberately different grouping from the closed-form triple sum
    Rational total(0);
    Integer kfact = factorial(k);
    for (unsigned long b = 0; 2 * b <= k; ++b) {          // half-power of the arcsine term
        for (unsigned long cc = 0; 2 * b + cc <= k; ++cc) {  // power of q(c+u)
            unsigned long a = k - 2 * b - cc;
            Rational coeff = Rational(kfact) /
                             Rational(factorial(a) * factorial(2 * b) * factorial(cc));
            coeff *= binomial(2 * static_cast<long>(b), static_cast<long>(b)) /
                     pow(Rational(4), static_cast<long>(b));
            coeff *= pow(Rational(4), static_cast<long>(b)) *
                     pow(q, static_cast<long>(b + cc));
            for (unsigned long m = 0; m <= b + cc; ++m) {
                total += coeff *
                         binomial(static_cast<long>(b + cc), static_cast<long>(m)) *
                         pow(c, static_cast<long>(m)) /
                         Rational(static_cast<long>(k - m) + 1);
            }
        }
    }
    return total / pow(Rational(1) - q, static_cast<long>(k));
}

Rational krawtchouk_eq_moment(const Rational& kappa, const Rational& p, unsigned long k) {
    if (kappa <= 1) throw std::invalid_argument("need kappa > 1");
    if (p <= 0 || p >= 1) throw std::invalid_argument("need p in (0,1)");
    Rational total(0);
    Integer kfact = factorial(k);
    Rational pk = pow(p, static_cast<long>(k));
    for (unsigned long j = 0; 2 * j <= k; ++j) {
        for (unsigned long l = 0; l + 2 * j <= k; ++l) {
            for (unsigned long m = 0; m <= j; ++m) {
                Rational denom(factorial(l) * factorial(j) * factorial(m) * factorial(j - m) *
                               factorial(k - 2 * j - l));
                denom *= Rational(static_cast<long>(j + l + m) + 1);
                Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
                total += pk * Rational(kfact) * sign *
                         pow(kappa, static_cast<long>(k) - static_cast<long>(j + l + m)) / denom *
                         pow((Rational(1) - p) / p, static_cast<long>(j)) *
                         pow((Rational(1) - 2 * p) / p, static_cast<long>(l));
            }
        }
    }
    return total;
}

Rational krawtchouk_eq_moment_oracle(const Rational& kappa, const Rational& p, unsigned long k) {
    if (kappa <= 1) throw std::invalid_argument("need kappa > 1");
    if (p <= 0 || p >= 1) throw std::invalid_argument("need p in (0,1)");
    // ((1-p)u + 2 sqrt(p(1-p)u(kappa-u)) s + p(kappa-u))^k, direct grouping
    Rational total(0);
    Integer kfact = factorial(k);
    for (unsigned long b = 0; 2 * b <= k; ++b) {
        for (unsigned long cc = 0; 2 * b + cc <= k; ++cc) {
            unsigned long a = k - 2 * b - cc;
            Rational coeff = Rational(kfact) /
                             Rational(factorial(a) * factorial(2 * b) * factorial(cc));
            coeff *= binomial(2 * static_cast<long>(b), static_cast<long>(b));
            coeff *= pow(Rational(1) - p, static_cast<long>(a + b)) *
                     pow(p, static_cast<long>(b + cc));
            for (unsigned long m = 0; m <= b + cc; ++m) {
                Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
                total += coeff * sign *
                         binomial(static_cast<long>(b + cc), static_cast<long>(m)) *
                         pow(kappa, static_cast<long>(b + cc - m)) /
                         Rational(static_cast<long>(a + b + m) + 1);
            }
        }
    }
    return total;
}

bool charlier_correspondence(const Rational& theta, const Rational& h, unsigned long k) {
    if (theta <= 0 || h <= 0) throw std::invalid_argument("need theta, h > 0");
    Rational randomised = poissonised_charlier(theta, k).eval(Rational(1) / h);
    return charlier_eq_moment(h, k) == randomised / pow(theta / h, static_cast<long>(k));
}

bool riordan_check(unsigned long m, unsigned long k) {
    if (m > k) throw std::invalid_argument("need 0 <= m <= k");
    Rational lhs = binomial(static_cast<long>(k), static_cast<long>(m)) *
                   binomial(static_cast<long>(k), static_cast<long>(k - m));
    Rational rhs(0);
    for (unsigned long j = 0; j <= std::min(m, k - m); ++j)
        rhs += binomial(static_cast<long>(m), static_cast<long>(j)) *
               binomial(static_cast<long>(k - j), static_cast<long>(k - m - j)) *
               binomial(static_cast<long>(k), static_cast<long>(k - j));
    return lhs == rhs;
}

MeixnerLimitReport meixner_limit_correspondence(const Rational& q, unsigned long k,
                                                const std::vector<Rational>& t_sequence,
                                                long m_max, int digits) {
    if (q <= 0 || q >= 1) throw std::invalid_argument("need q in (0,1)");
    MeixnerLimitReport report;
    report.limit = meixner1_eq_moment(q, k);
    report.diverged = false;
    report.gaps_decreasing = true;

    Rational mk(-static_cast<long>(k));
    Rational pref = pow(q / (Rational(1) - q), static_cast<long>(k)) /
                    Rational(static_cast<long>(k) + 1);
    Real limit_real(report.limit, digits);

    const Real* prev_gap = nullptr;
    for (const auto& t : t_sequence) {
        Rational tq = t * q;
        if (tq >= 1 || tq <= 0) {
            report.diverged = true;
            continue;
        }
        Rational w2 = (Rational(1) - tq) * (Rational(1) - tq);

        // S(t): normalised factorial moments against the 2-negative binomial
        Real s(0L, digits);
        Real weight(w2, digits);  // (m+1)(tq)^m (1-tq)^2
        for (long m = 0; m <= m_max; ++m) {
            // M^1_q(k,m+1)/(m+2)_k = pref * 3F2(-k,-k,-m; 1,-m-k-1; 1/q)
            Rational f = pfq_terminating(
                {{mk, mk, Rational(-m)},
                 {Rational(1), Rational(-m - static_cast<long>(k) - 1)},
                 Rational(1) / q});
            s += weight * (pref * f * Rational(m + 1));
            weight *= tq;
        }

        // the hypergeometric rearrangement over exactly the same index set
        Real inter(0L, digits);
        for (unsigned long j = 0; j <= k; ++j) {
            Real lsum(0L, digits);
            Real tql(1L, digits);
            for (long l = 0; l + static_cast<long>(j) <= m_max; ++l) {
                Rational term = Rational(l + 1) *
                                rising_factorial(Rational(l + 2), j) /
                                rising_factorial(Rational(l + static_cast<long>(k) + 2), j);
                lsum += tql * term;
                tql *= tq;
            }
            Rational cj = binomial(static_cast<long>(k), static_cast<long>(j));
            inter += lsum * (pref * cj * cj * pow(t, static_cast<long>(j)) * w2);
        }

        MeixnerLimitPoint point{t, s, abs_diff(s, limit_real), inter, abs_diff(s, inter)};
        if (prev_gap && !(point.gap < *prev_gap)) report.gaps_decreasing = false;
        report.points.push_back(std::move(point));
        prev_gap = &report.points.back().gap;
    }
    return report;
}

}  // namespace ope
