#include "ope/ensembles.hpp"

#include <cmath>
#include <stdexcept>

namespace ope {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_krawtchouk_point(const Krawtchouk& kr, unsigned long x) {
    if (static_cast<long>(x) > kr.K)
        throw std::domain_error("Krawtchouk support is x = 0..K");
}

}  // namespace

void validate_distribution(const EnsembleParams& params) {
    std::visit(overloaded{
                   [](const Charlier& c) {
                       if (c.theta <= 0) throw std::invalid_argument("Charlier needs theta > 0");
                   },
                   [](const Meixner& m) {
                       if (m.gamma <= 0) throw std::invalid_argument("Meixner needs gamma > 0");
                       if (m.q <= 0 || m.q >= 1)
                           throw std::invalid_argument("Meixner needs q in (0,1)");
                   },
                   [](const Krawtchouk& k) {
                       if (k.K < 0) throw std::invalid_argument("Krawtchouk needs K >= 0");
                       if (k.p <= 0 || k.p >= 1)
                           throw std::invalid_argument("Krawtchouk needs p in (0,1)");
                   },
               },
               params);
}

namespace detail {

Rational pmf_rational_part(const EnsembleParams& params, unsigned long x) {
    return std::visit(
        overloaded{
            [&](const Charlier& c) -> Rational { return pow(c.theta, static_cast<long>(x)) / Rational(factorial(x)); },
            [&](const Meixner& m) -> Rational {
                return rising_factorial(m.gamma, x) / Rational(factorial(x)) *
                       pow(m.q, static_cast<long>(x));
            },
            [&](const Krawtchouk& k) -> Rational {
                check_krawtchouk_point(k, x);
                return binomial(k.K, static_cast<long>(x)) * pow(k.p, static_cast<long>(x)) *
                       pow(Rational(1) - k.p, k.K - static_cast<long>(x));
            },
        },
        params);
}

Real pmf_transcendental_factor(const EnsembleParams& params, int digits) {
    return std::visit(
        overloaded{
            [&](const Charlier& c) -> Real { return Real::exp(-Real(c.theta, digits)); },
            [&](const Meixner& m) -> Real {
                Rational base = Rational(1) - m.q;
                if (is_integer(m.gamma))
                    return Real(pow(base, m.gamma.get_num().get_si()), digits);
                return Real::pow(Real(base, digits), Real(m.gamma, digits));
            },
            [&](const Krawtchouk&) -> Real { return Real(1L, digits); },
        },
        params);
}

Rational norm_prefactor_squared(const EnsembleParams& params, unsigned long n) {
    return std::visit(
        overloaded{
            [&](const Charlier& c) -> Rational {
                return pow(c.theta, static_cast<long>(n)) / Rational(factorial(n));
            },
            [&](const Meixner& m) -> Rational {
                return rising_factorial(m.gamma, n) * pow(m.q, static_cast<long>(n)) /
                       Rational(factorial(n));
            },
            [&](const Krawtchouk& k) -> Rational {
                if (static_cast<long>(n) > k.K)
                    throw std::domain_error("Krawtchouk polynomials exist for n = 0..K");
                return binomial(k.K, static_cast<long>(n)) *
                       pow(k.p / (Rational(1) - k.p), static_cast<long>(n));
            },
        },
        params);
}

Rational hyper_factor(const EnsembleParams& params, unsigned long n, unsigned long x) {
    Rational mn(-static_cast<long>(n)), mx(-static_cast<long>(x));
    return std::visit(
        overloaded{
            [&](const Charlier& c) -> Rational {
                return pfq_terminating({{mn, mx}, {}, Rational(-1) / c.theta});
            },
            [&](const Meixner& m) -> Rational {
                if (m.q == 0) throw std::domain_error("Meixner polynomial needs q != 0");
                return pfq_terminating({{mn, mx}, {m.gamma}, Rational(1) - Rational(1) / m.q});
            },
            [&](const Krawtchouk& k) -> Rational {
                if (static_cast<long>(n) > k.K)
                    throw std::domain_error("Krawtchouk polynomials exist for n = 0..K");
                check_krawtchouk_point(k, x);
                return pfq_terminating({{mn, mx}, {Rational(-k.K)}, Rational(1) / k.p});
            },
        },
        params);
}

}  // namespace detail

Real reference_pmf(const EnsembleParams& params, unsigned long x, int digits) {
    return Real(detail::pmf_rational_part(params, x), digits) *
           detail::pmf_transcendental_factor(params, digits);
}

Rational poly_squared(const EnsembleParams& params, unsigned long n, unsigned long x) {
    Rational f = detail::hyper_factor(params, n, x);
    return detail::norm_prefactor_squared(params, n) * f * f;
}

void validate(const OnePointSpec& spec) {
    validate_distribution(spec.params);
    if (spec.N < 1) throw std::invalid_argument("need at least one particle");
    if (const auto* k = std::get_if<Krawtchouk>(&spec.params))
        if (spec.N > k->K + 1)
            throw std::invalid_argument("Krawtchouk supports at most K+1 particles");
}

namespace {

// (1/N) sum_{n<N} p_n(x)^2, exact.
Rational mean_poly_squared(const OnePointSpec& spec, unsigned long x) {
    Rational sum(0);
    for (long n = 0; n < spec.N; ++n) sum += poly_squared(spec.params, static_cast<unsigned long>(n), x);
    return sum / Rational(spec.N);
}

long krawtchouk_support_end(const EnsembleParams& params) {
    return std::get<Krawtchouk>(params).K;
}

}  // namespace

Real one_point_density(const OnePointSpec& spec, unsigned long x, int digits) {
    validate(spec);
    Rational exact = mean_poly_squared(spec, x) * detail::pmf_rational_part(spec.params, x);
    return Real(exact, digits) * detail::pmf_transcendental_factor(spec.params, digits);
}

TailSum factorial_moment_oracle(const OnePointSpec& spec, unsigned long k, long x_max, int digits) {
    validate(spec);
    bool finite = std::holds_alternative<Krawtchouk>(spec.params);
    long end = finite ? krawtchouk_support_end(spec.params) : x_max;
    if (!finite && x_max < static_cast<long>(k))
        throw std::invalid_argument("x_max must be at least k");
    Rational sum(0), last(0);
    for (long x = 0; x <= end; ++x) {
        auto ux = static_cast<unsigned long>(x);
        last = falling_factorial(Rational(x), k) * mean_poly_squared(spec, ux) *
               detail::pmf_rational_part(spec.params, ux);
        sum += last;
    }
    Real factor = detail::pmf_transcendental_factor(spec.params, digits);
    Real last_term = finite ? Real(0L, digits) : (Real(last, digits) * factor).abs();
    return {Real(sum, digits) * factor, last_term};
}

std::vector<CoulombResult> coulomb_oracle_multi(const EnsembleParams& params, long N,
                                                const std::vector<unsigned long>& ks, long x_max,
                                                int digits) {
    validate_distribution(params);
    if (N < 1) throw std::invalid_argument("need at least one particle");
    if (const auto* kr = std::get_if<Krawtchouk>(&params)) x_max = std::min(x_max, kr->K);
    if (x_max < N - 1) throw std::invalid_argument("x_max must allow N distinct sites");

    std::vector<Rational> pmf_rat(static_cast<size_t>(x_max) + 1);
    for (long x = 0; x <= x_max; ++x)
        pmf_rat[static_cast<size_t>(x)] = detail::pmf_rational_part(params, static_cast<unsigned long>(x));
    std::vector<std::vector<Rational>> ff(ks.size(), std::vector<Rational>(static_cast<size_t>(x_max) + 1));
    for (size_t j = 0; j < ks.size(); ++j)
        for (long x = 0; x <= x_max; ++x)
            ff[j][static_cast<size_t>(x)] = falling_factorial(Rational(x), ks[j]);

    // Vandermonde^2 kills repeated coordinates and is symmetric, so it is
    // enough to visit strictly increasing configurations; Z_N picks up N!.
    Real z(0L, digits);
    std::vector<Real> moment_sums(ks.size(), Real(0L, digits));
    std::vector<long> x(static_cast<size_t>(N));
    for (long i = 0; i < N; ++i) x[static_cast<size_t>(i)] = i;
    while (true) {
        Integer delta(1);
        for (long i = 0; i < N; ++i)
            for (long j = i + 1; j < N; ++j)
                delta *= x[static_cast<size_t>(j)] - x[static_cast<size_t>(i)];
        Rational weight(delta * delta);
        for (long i = 0; i < N; ++i) weight *= pmf_rat[static_cast<size_t>(x[static_cast<size_t>(i)])];
        Real w(weight, digits);
        z += w;
        for (size_t j = 0; j < ks.size(); ++j) {
            Rational stat(0);
            for (long i = 0; i < N; ++i) stat += ff[j][static_cast<size_t>(x[static_cast<size_t>(i)])];
            moment_sums[j] += w * (stat / Rational(N));
        }
        // next strictly increasing tuple bounded by x_max
        long pos = N - 1;
        while (pos >= 0 && x[static_cast<size_t>(pos)] == x_max - (N - 1 - pos)) --pos;
        if (pos < 0) break;
        ++x[static_cast<size_t>(pos)];
        for (long i = pos + 1; i < N; ++i) x[static_cast<size_t>(i)] = x[static_cast<size_t>(i - 1)] + 1;
    }

    Real factor = detail::pmf_transcendental_factor(params, digits);
    Real factor_pow(1L, digits);
    for (long i = 0; i < N; ++i) factor_pow *= factor;
    Real nfact(Rational(factorial(static_cast<unsigned long>(N))), digits);
    std::vector<CoulombResult> out;
    out.reserve(ks.size());
    for (size_t j = 0; j < ks.size(); ++j)
        out.push_back({moment_sums[j] / z, z * nfact * factor_pow});
    return out;
}

CoulombResult coulomb_oracle(const EnsembleParams& params, long N, unsigned long k, long x_max,
                             int digits) {
    return coulomb_oracle_multi(params, N, {k}, x_max, digits)[0];
}

Real orthonormality_defect(const EnsembleParams& params, unsigned long m, unsigned long n,
                           long x_max, int digits) {
    validate_distribution(params);
    if (const auto* kr = std::get_if<Krawtchouk>(&params)) x_max = kr->K;
    Rational sum(0);
    for (long x = 0; x <= x_max; ++x) {
        auto ux = static_cast<unsigned long>(x);
        sum += detail::hyper_factor(params, m, ux) * detail::hyper_factor(params, n, ux) *
               detail::pmf_rational_part(params, ux);
    }
    Rational pref2 = detail::norm_prefactor_squared(params, m) * detail::norm_prefactor_squared(params, n);
    Real total = Real(sum, digits) * Real::sqrt(Real(pref2, digits)) *
                 detail::pmf_transcendental_factor(params, digits);
    if (m == n) total -= Rational(1);
    return total.abs();
}

long default_x_max(const EnsembleParams& params, long N) {
    return std::visit(
        overloaded{
            [&](const Charlier& c) -> long {
                double mean = c.theta.get_d();
                return std::max(200L, static_cast<long>(std::ceil(20.0 * N * mean)));
            },
            [&](const Meixner& m) -> long {
                double mean = Rational(m.gamma * m.q / (Rational(1) - m.q)).get_d();
                return std::max(200L, static_cast<long>(std::ceil(20.0 * N * mean)));
            },
            [&](const Krawtchouk& k) -> long { return k.K; },
        },
        params);
}

}  // namespace ope
