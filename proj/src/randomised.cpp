#include "ope/randomised.hpp"

#include <stdexcept>

#include "ope/hypergeometric.hpp"
#include "ope/moments.hpp"

namespace ope {

Rational jacobi_eval(const JacobiSpec& spec, const Rational& x) {
    Rational mn(-static_cast<long>(spec.n));
    Rational f = pfq_terminating({{mn, Rational(static_cast<long>(spec.n)) + spec.alpha + spec.beta + 1},
                                  {spec.alpha + 1},
                                  (Rational(1) - x) / 2});
    return rising_factorial(spec.alpha + 1, spec.n) / Rational(factorial(spec.n)) * f;
}

Poly jacobi_poly(const JacobiSpec& spec) {
    // expand the terminating 2F1 with the polynomial argument (1-x)/2
    Poly x = Poly::variable();
    Poly z = make_rational(1, 2) * (Poly(Rational(1)) - x);
    Poly sum(Rational(1));
    Rational term(1);
    Poly zpow(Rational(1));
    for (unsigned long i = 0; i < spec.n; ++i) {
        Rational li = static_cast<long>(i);
        term *= (li - static_cast<long>(spec.n)) *
                (li + static_cast<long>(spec.n) + spec.alpha + spec.beta + 1) /
                ((li + spec.alpha + 1) * (li + 1));
        zpow = zpow * z;
        sum += term * zpow;
    }
    return rising_factorial(spec.alpha + 1, spec.n) / Rational(factorial(spec.n)) * sum;
}

Rational legendre_eval(unsigned long n, const Rational& x) {
    return jacobi_eval({Rational(0), Rational(0), n}, x);
}

Poly legendre_poly(unsigned long n) { return jacobi_poly({Rational(0), Rational(0), n}); }

Rational catalan_number(unsigned long k) {
    return binomial(2 * static_cast<long>(k), static_cast<long>(k)) /
           Rational(static_cast<long>(k) + 1);
}

Poly poissonised_charlier(const Rational& theta, unsigned long k) {
    std::vector<Rational> coeffs(k + 1);
    Rational tk = pow(theta, static_cast<long>(k));
    for (unsigned long i = 0; i <= k; ++i) {
        Rational c = binomial(static_cast<long>(k), static_cast<long>(i));
        coeffs[i] = tk * c * c / Rational(static_cast<long>(i) + 1);
    }
    return Poly(std::move(coeffs));
}

RatFunc poissonised_charlier_jacobi(const Rational& theta, unsigned long k) {
    Poly t = Poly::variable();
    Poly one(Rational(1));
    RatFunc arg(one + t, one - t);
    RatFunc p = substitute(jacobi_poly({Rational(1), Rational(0), k}), arg);
    Rational pref = pow(theta, static_cast<long>(k)) / Rational(static_cast<long>(k) + 1);
    return RatFunc(pref * (one - t).pow(k)) * p;
}

Rational catalan_poissonised(const Rational& theta, unsigned long k) {
    return pow(theta, static_cast<long>(k)) * Rational(2 * static_cast<long>(k) + 1) /
           Rational(static_cast<long>(k) + 1) * catalan_number(k);
}

RatFunc nb_meixner(const Rational& q, unsigned long k) {
    if (q == 0 || q == 1) throw std::invalid_argument("q must avoid 0 and 1");
    std::vector<Rational> coeffs(k + 1);
    for (unsigned long i = 0; i <= k; ++i) {
        Rational c = binomial(static_cast<long>(k), static_cast<long>(i));
        coeffs[i] = c * c;  // 2F1(-k,-k;1;t)
    }
    Poly f(std::move(coeffs));
    Poly t = Poly::variable();
    Poly one_minus_qt = Poly(Rational(1)) - q * t;
    Rational pref = Rational(factorial(k)) * pow(q / (Rational(1) - q), static_cast<long>(k));
    return RatFunc(pref * f, one_minus_qt.pow(k));
}

RatFunc nb_meixner_legendre(const Rational& q, unsigned long k) {
    if (q == 0 || q == 1) throw std::invalid_argument("q must avoid 0 and 1");
    Poly t = Poly::variable();
    Poly one(Rational(1));
    RatFunc arg(one + t, one - t);
    RatFunc p = substitute(legendre_poly(k), arg);
    Poly one_minus_qt = one - q * t;
    Rational pref = Rational(factorial(k)) * pow(q / (Rational(1) - q), static_cast<long>(k));
    return RatFunc(pref * (one - t).pow(k), one_minus_qt.pow(k)) * p;
}

Rational catalan_nb_meixner(const Rational& q, unsigned long k) {
    return pow(q, static_cast<long>(k)) * pow(Rational(1) - q, -2 * static_cast<long>(k)) *
           Rational(factorial(k + 1)) * catalan_number(k);
}

Real exton_defect(const Rational& a, const Rational& b, const Rational& c, const Rational& theta,
                  const Rational& t, long m_max, int digits) {
    if (theta == 0) throw std::invalid_argument("theta must be nonzero");
    if (is_nonpositive_integer(c)) throw std::invalid_argument("c must avoid nonpositive integers");

    // left side: e^{t theta} 2F1(a,b;c;t)
    Real f21(0L, digits);
    HypergeoSpec lhs_spec{{a, b}, {c}, t};
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        f21 = Real(pfq_terminating(lhs_spec), digits);
    } else {
        Rational abs_t = t < 0 ? Rational(-t) : t;
        if (abs_t >= 1) throw std::invalid_argument("need |t| < 1 for the non-terminating side");
        f21 = pfq_truncated(lhs_spec, 64 * (digits > 0 ? digits : Real::default_digits()), digits).value;
    }
    Real lhs = Real::exp(Real(t * theta, digits)) * f21;

    // right side: sum over the Poisson-style weights with terminating 3F1 kernels
    Real rhs(0L, digits);
    Rational weight(1);  // (t theta)^m / m!
    for (long m = 0; m <= m_max; ++m) {
        Rational f31 = pfq_terminating({{a, b, Rational(-m)}, {c}, Rational(-1) / theta});
        rhs += Real(weight * f31, digits);
        weight *= t * theta / Rational(m + 1);
    }
    return abs_diff(lhs, rhs);
}

TailSum poissonisation_oracle(const Rational& theta, unsigned long k, const Rational& t,
                              long m_max, int digits) {
    if (t <= 0) throw std::invalid_argument("need t > 0");
    Real sum(0L, digits), last(0L, digits);
    Real weight = Real::exp(-Real(t * theta, digits));  // e^{-t theta} (t theta)^m / m!
    for (long m = 0; m <= m_max; ++m) {
        last = weight * charlier_ledoux(theta, k, m + 1);
        sum += last;
        weight *= t * theta / Rational(m + 1);
    }
    return {sum, last.abs()};
}

TailSum nb_oracle(const Rational& q, unsigned long k, const Rational& t, long m_max, int digits) {
    Rational tq = t * q;
    if (tq <= 0 || tq >= 1) throw std::invalid_argument("need 0 < tq < 1");
    Rational one_minus_tq2 = (Rational(1) - tq) * (Rational(1) - tq);
    Real sum(0L, digits), last(0L, digits);
    Real weight(one_minus_tq2, digits);  // (m+1)(tq)^m (1-tq)^2
    for (long m = 0; m <= m_max; ++m) {
        last = weight * (Rational(m + 1) * meixner_ledoux(Rational(1), q, k, m + 1));
        sum += last;
        weight *= tq;
    }
    return {sum, last.abs()};
}

Poly recurrence_residual_charlier(const Rational& theta, unsigned long k) {
    if (k < 1) throw std::invalid_argument("recurrence needs k >= 1");
    long kl = static_cast<long>(k);
    Poly t = Poly::variable();
    Poly one(Rational(1));
    Poly mkp1 = poissonised_charlier(theta, k + 1);
    Poly mk = poissonised_charlier(theta, k);
    Poly mkm1 = poissonised_charlier(theta, k - 1);
    Poly mid = Rational((2 * kl + 3) * (2 * kl + 1)) * (one + t) + (one - t);
    return Rational((2 * kl + 1) * (kl + 2) * (kl + 2)) * mkp1 -
           theta * Rational(kl + 1) * (mid * mk) +
           theta * theta * Rational(kl * kl * (2 * kl + 3)) * ((one - t) * (one - t) * mkm1);
}

RatFunc recurrence_residual_meixner(const Rational& q, unsigned long k) {
    if (k < 1) throw std::invalid_argument("recurrence needs k >= 1");
    long kl = static_cast<long>(k);
    Poly t = Poly::variable();
    Poly one(Rational(1));
    RatFunc c(q * one, (Rational(1) - q) * (one - q * t));  // q/((1-q)(1-tq))
    RatFunc mkp1 = nb_meixner(q, k + 1);
    RatFunc mk = nb_meixner(q, k);
    RatFunc mkm1 = nb_meixner(q, k - 1);
    RatFunc kq_term = RatFunc(Rational(kl) * (one - t)) * c;
    return mkp1 - RatFunc(Rational(2 * kl + 1) * (one + t)) * c * mk + kq_term * kq_term * mkm1;
}

RatFunc ode_residual_jacobi_substituted(unsigned long k) {
    Poly t = Poly::variable();
    Poly one(Rational(1));
    RatFunc p = substitute(jacobi_poly({Rational(1), Rational(0), k}), RatFunc(one + t, one - t));
    RatFunc p1 = p.derivative();
    RatFunc p2 = p1.derivative();
    Poly omt = one - t;
    return RatFunc(t * omt * omt) * p2 + RatFunc((Poly(Rational(2)) - t) * omt) * p1 -
           RatFunc(Rational(static_cast<long>(k) * (static_cast<long>(k) + 2)) * one) * p;
}

RatFunc printed_charlier_ode_residual(const Rational& theta, unsigned long k) {
    long kl = static_cast<long>(k);
    Poly t = Poly::variable();
    Poly one(Rational(1));
    RatFunc m{poissonised_charlier(theta, k)};
    RatFunc m1 = m.derivative();
    RatFunc m2 = m1.derivative();
    // leading coefficient t/(1-t)^{k-2} as printed; polynomial once k <= 2
    RatFunc lead = (kl <= 2) ? RatFunc(t * (one - t).pow(static_cast<unsigned long>(2 - kl)))
                             : RatFunc(t, (one - t).pow(static_cast<unsigned long>(kl - 2)));
    return lead * m2 + RatFunc(Poly(pow(Rational(2), kl - 2) * Rational(2 * kl + 3))) * m1 +
           RatFunc(Poly(pow(Rational(2), kl - 1) * Rational(kl * kl))) * m;
}

RatFunc printed_meixner_ode_residual(const Rational& q, unsigned long k) {
    long kl = static_cast<long>(k);
    Poly t = Poly::variable();
    Poly one(Rational(1));
    RatFunc m = nb_meixner(q, k);
    RatFunc m1 = m.derivative();
    RatFunc m2 = m1.derivative();
    Poly one_minus_qt = one - q * t;
    Poly mid_num = q * (t * t) - (Rational(1) - Rational(2 * kl) * (Rational(1) - q) + q) * t + one;
    Poly last_num = Rational(kl) * q * (one - t) + Rational(kl * kl) * (one - q * q * t);
    return RatFunc(t * (one - t)) * m2 + RatFunc(mid_num, one_minus_qt) * m1 -
           RatFunc(last_num, one_minus_qt * one_minus_qt) * m;
}

Poly jacobi_ode_residual(unsigned long k) {
    Poly x = Poly::variable();
    Poly one(Rational(1));
    Poly y = jacobi_poly({Rational(1), Rational(0), k});
    return (one - x * x) * y.derivative().derivative() -
           (one + Rational(3) * x) * y.derivative() +
           Rational(static_cast<long>(k) * (static_cast<long>(k) + 2)) * y;
}

Poly printed_legendre_recurrence_residual(unsigned long k) {
    if (k < 1) throw std::invalid_argument("recurrence needs k >= 1");
    long kl = static_cast<long>(k);
    Poly x = Poly::variable();
    return x * legendre_poly(k) -
           (Rational(kl + 1) * legendre_poly(k + 1) - Rational(2 * kl) * legendre_poly(k) +
            Rational(kl) * legendre_poly(k - 1));
}

Poly printed_legendre_ode_residual(unsigned long k) {
    long kl = static_cast<long>(k);
    Poly x = Poly::variable();
    Poly one(Rational(1));
    Poly y = legendre_poly(k);
    return (one - x) * (one - x) * y.derivative().derivative() -
           Rational(2) * x * y.derivative() + Rational(kl * (kl + 1)) * y;
}

Poly legendre_recurrence_standard_residual(unsigned long k) {
    if (k < 1) throw std::invalid_argument("recurrence needs k >= 1");
    long kl = static_cast<long>(k);
    Poly x = Poly::variable();
    return Rational(2 * kl + 1) * (x * legendre_poly(k)) -
           (Rational(kl + 1) * legendre_poly(k + 1) + Rational(kl) * legendre_poly(k - 1));
}

Poly legendre_ode_standard_residual(unsigned long k) {
    long kl = static_cast<long>(k);
    Poly x = Poly::variable();
    Poly one(Rational(1));
    Poly y = legendre_poly(k);
    return (one - x * x) * y.derivative().derivative() - Rational(2) * x * y.derivative() +
           Rational(kl * (kl + 1)) * y;
}

Poly jacobi10_recurrence_residual(unsigned long k) {
    if (k < 1) throw std::invalid_argument("recurrence needs k >= 1");
    long kl = static_cast<long>(k);
    auto p = [&](unsigned long n) { return jacobi_poly({Rational(1), Rational(0), n}); };
    Poly x = Poly::variable();
    return x * p(k) -
           (Rational(kl + 2) / Rational(2 * kl + 3) * p(k + 1) -
            Rational(1) / Rational((2 * kl + 1) * (2 * kl + 3)) * p(k) +
            Rational(kl) / Rational(2 * kl + 1) * p(k - 1));
}

std::vector<PrintedEquationReport> adjudicate_printed_equations(
    const Rational& theta, const Rational& q, const std::vector<unsigned long>& ks) {
    std::vector<PrintedEquationReport> out;
    auto push_ratfunc = [&](const std::string& name, unsigned long k, const RatFunc& r) {
        out.push_back({name, k, r.is_zero(), r.canonical().str()});
    };
    auto push_poly = [&](const std::string& name, unsigned long k, const Poly& r,
                         const std::string& var) {
        out.push_back({name, k, r.is_zero(), r.str(var)});
    };
    for (unsigned long k : ks) {
        push_ratfunc("poissonised charlier second-order ODE (as printed)", k,
                     printed_charlier_ode_residual(theta, k));
        push_ratfunc("negative-binomialised meixner second-order ODE (as printed)", k,
                     printed_meixner_ode_residual(q, k));
        push_poly("jacobi (1,0) second-order ODE", k, jacobi_ode_residual(k), "x");
        push_poly("legendre three-term recurrence (as printed)", k,
                  printed_legendre_recurrence_residual(k), "x");
        push_poly("legendre second-order ODE (as printed)", k, printed_legendre_ode_residual(k),
                  "x");
    }
    return out;
}

SqrtTwoMultiple legendre_rational(unsigned long k, const Rational& x) {
    if (x == -1) throw std::domain_error("legendre rational function has a pole at x = -1");
    Rational arg = (x - 1) / (x + 1);
    return {legendre_eval(k, arg) / (x + 1)};
}

bool chu_vandermonde_check(unsigned long k) {
    Rational lhs(0);
    for (unsigned long j = 0; j <= k; ++j)
        lhs += binomial(static_cast<long>(k) + 1, static_cast<long>(k - j)) *
               binomial(static_cast<long>(k), static_cast<long>(j));
    return lhs == binomial(2 * static_cast<long>(k) + 1, static_cast<long>(k));
}

}  // namespace ope
