#include "ope/moments.hpp"

#include <stdexcept>

#include "ope/hypergeometric.hpp"

namespace ope {

namespace {

// sum_{l=i}^{N-1} falling_factorial(l, i) * extra(l), the inner Ledoux sum.
template <typename F>
Rational inner_sum(unsigned long i, long N, F&& extra) {
    Rational sum(0);
    for (long l = static_cast<long>(i); l < N; ++l)
        sum += falling_factorial(Rational(l), i) * extra(l);
    return sum;
}

}  // namespace

Rational charlier_ledoux(const Rational& theta, unsigned long k, long N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (theta == 0) throw std::invalid_argument("theta must be nonzero");
    Rational total(0);
    for (unsigned long i = 0; i <= k; ++i) {
        Rational c = binomial(static_cast<long>(k), static_cast<long>(i));
        total += pow(theta, static_cast<long>(k - i)) * c * c *
                 inner_sum(i, N, [](long) { return Rational(1); });
    }
    return total / Rational(N);
}

Rational meixner_ledoux(const Rational& gamma, const Rational& q, unsigned long k, long N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (q == 0 || q == 1) throw std::invalid_argument("q must avoid 0 and 1");
    Rational ratio_k = pow(q / (Rational(1) - q), static_cast<long>(k));
    Rational total(0);
    for (unsigned long i = 0; i <= k; ++i) {
        Rational c = binomial(static_cast<long>(k), static_cast<long>(i));
        total += ratio_k * pow(q, -static_cast<long>(i)) * c * c *
                 inner_sum(i, N, [&](long l) { return rising_factorial(gamma + l, k - i); });
    }
    return total / Rational(N);
}

Rational krawtchouk_ledoux(long K, const Rational& p, unsigned long k, long N) {
    if (N < 1 || N > K) throw std::invalid_argument("Krawtchouk moments need 1 <= N <= K");
    if (p <= 0 || p >= 1) throw std::invalid_argument("need p in (0,1)");
    Rational total(0);
    for (unsigned long i = 0; i <= k; ++i) {
        Rational c = binomial(static_cast<long>(k), static_cast<long>(i));
        total += pow(p, static_cast<long>(k - i)) * pow(Rational(1) - p, static_cast<long>(i)) *
                 c * c *
                 inner_sum(i, N, [&](long l) { return falling_factorial(Rational(K - l), k - i); });
    }
    return total / Rational(N);
}

Rational krawtchouk_via_meixner(long K, const Rational& p, unsigned long k, long N) {
    if (N < 1 || N > K) throw std::invalid_argument("Krawtchouk moments need 1 <= N <= K");
    return meixner_ledoux(Rational(-K), -p / (Rational(1) - p), k, N);
}

Rational charlier_hyper(const Rational& theta, unsigned long k, long N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (theta == 0) throw std::invalid_argument("theta must be nonzero");
    Rational mk(-static_cast<long>(k));
    Rational f = pfq_terminating({{mk, mk, Rational(1 - N)}, {Rational(2)}, Rational(-1) / theta});
    return pow(theta, static_cast<long>(k)) * f;
}

Rational meixner1_hyper(const Rational& q, unsigned long k, long N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (q == 0 || q == 1) throw std::invalid_argument("q must avoid 0 and 1");
    Rational mk(-static_cast<long>(k));
    Rational f = pfq_terminating(
        {{mk, mk, Rational(1 - N)}, {Rational(1), Rational(-N - static_cast<long>(k))}, Rational(1) / q});
    return pow(q / (Rational(1) - q), static_cast<long>(k)) *
           rising_factorial(Rational(N + 1), k) / Rational(static_cast<long>(k) + 1) * f;
}

bool pochsum_check(unsigned long i, unsigned long k, long N) {
    if (static_cast<long>(i) > N - 1) throw std::invalid_argument("need 0 <= i <= N-1");
    Rational lhs(0);
    for (long l = static_cast<long>(i); l < N; ++l)
        lhs += Rational(factorial(static_cast<unsigned long>(l) + k - i)) /
               Rational(factorial(static_cast<unsigned long>(l) - i));
    Rational rhs = rising_factorial(Rational(N - static_cast<long>(i)), k + 1) /
                   Rational(static_cast<long>(k) + 1);
    return lhs == rhs;
}

Rational normalised_moment_in_k(const MomentFamily& family, unsigned long k, long N) {
    if (const auto* c = std::get_if<CharlierFamily>(&family))
        return pow(c->theta, -static_cast<long>(k)) * charlier_ledoux(c->theta, k, N);
    const auto& m = std::get<Meixner1Family>(family);
    return pow((Rational(1) - m.q) / m.q, static_cast<long>(k)) *
           rising_factorial(Rational(static_cast<long>(k) + 1), static_cast<unsigned long>(N)) /
           rising_factorial(Rational(N + 1), k) * meixner1_hyper(m.q, k, N);
}

Poly lagrange_interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw std::invalid_argument("node/value size mismatch");
    Poly acc;
    Poly x = Poly::variable();
    for (size_t i = 0; i < nodes.size(); ++i) {
        Poly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis = basis * (x - Poly(nodes[j]));
            denom *= nodes[i] - nodes[j];
        }
        acc += values[i] / denom * basis;
    }
    return acc;
}

Poly interpolate_normalized_in_k(const MomentFamily& family, long N) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    std::vector<Rational> nodes, values;
    for (long k = 0; k <= 2 * (N - 1); ++k) {
        nodes.emplace_back(k);
        values.push_back(normalised_moment_in_k(family, static_cast<unsigned long>(k), N));
    }
    Poly p = lagrange_interpolate(nodes, values);
    for (long k = 2 * N - 1; k <= 2 * N + 6; ++k)
        if (p.eval(Rational(k)) != normalised_moment_in_k(family, static_cast<unsigned long>(k), N))
            throw std::logic_error("normalised moment is not polynomial in k of the stated degree");
    return p;
}

Poly interpolate_in_Nminus1(const MomentFamily& family, unsigned long k) {
    auto moment = [&](long N) -> Rational {
        if (const auto* c = std::get_if<CharlierFamily>(&family))
            return charlier_ledoux(c->theta, k, N);
        return meixner1_hyper(std::get<Meixner1Family>(family).q, k, N);
    };
    std::vector<Rational> nodes, values;
    for (unsigned long m = 0; m <= k; ++m) {
        nodes.emplace_back(static_cast<long>(m));
        values.push_back(moment(static_cast<long>(m) + 1));
    }
    Poly p = lagrange_interpolate(nodes, values);
    for (unsigned long m = k + 1; m <= k + 6; ++m)
        if (p.eval(Rational(static_cast<long>(m))) != moment(static_cast<long>(m) + 1))
            throw std::logic_error("moment is not polynomial in N-1 of the stated degree");
    return p;
}

}  // namespace ope
