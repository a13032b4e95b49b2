#include "doctest.h"
#include "ope/ensembles.hpp"
#include "ope/moments.hpp"

using namespace ope;

namespace {
Rational rq(long n, long d = 1) { return make_rational(n, d); }
const int D = 70;

// The paper's listed small-N closed forms, used as frozen expectations.
Rational charlier_listed_N2(const Rational& theta, long k) {
    return rq(1, 2) * pow(theta, k - 1) * (Rational(k * k) + rq(2) * theta);
}
Rational charlier_listed_N3(const Rational& theta, long k) {
    Rational kk(k);
    return rq(1, 6) * pow(theta, k - 2) *
           (pow(kk, 4) - rq(2) * pow(kk, 3) + (rq(6) * theta + 1) * kk * kk +
            rq(6) * theta * theta);
}
Rational meixner1_listed(const Rational& q, long k, long N) {
    Rational base = pow(q / (Rational(1) - q), k);
    Rational kk(k);
    if (N == 1) return base * rising_factorial(rq(2), k) / (kk + 1);
    if (N == 2)
        return base * rising_factorial(rq(3), k) * (kk * kk + kk * q + rq(2) * q) /
               ((kk + 1) * (kk + 2) * q);
    // N == 3
    Rational num = pow(kk, 4) + rq(4) * pow(kk, 3) * q - rq(2) * pow(kk, 3) +
                   rq(2) * kk * kk * q * q + rq(8) * kk * kk * q + kk * kk +
                   rq(10) * kk * q * q + rq(12) * q * q;
    return base * rising_factorial(rq(4), k) * num /
           (rq(2) * (kk + 1) * (kk + 2) * (kk + 3) * q * q);
}
}  // namespace

TEST_CASE("Charlier double sum") {
    CHECK(charlier_ledoux(rq(2), 3, 1) == rq(8));
    CHECK(charlier_ledoux(rq(1), 2, 2) == rq(3));
    CHECK(charlier_ledoux(rq(2), 1, 3) == rq(3));
    CHECK(charlier_ledoux(rq(7, 3), 0, 5) == rq(1));
}

TEST_CASE("Meixner double sum") {
    CHECK(meixner_ledoux(rq(1), rq(1, 2), 2, 1) == rq(2));
    CHECK(meixner_ledoux(rq(5, 2), rq(2, 3), 0, 4) == rq(1));
    // brute-force check: E_rho[x] for gamma=2, q=1/3, N=2 is 2
    CHECK(meixner_ledoux(rq(2), rq(1, 3), 1, 2) == rq(2));
    auto oracle = factorial_moment_oracle({Meixner{rq(2), rq(1, 3)}, 2}, 1, 250, D);
    CHECK(abs_diff(oracle.value, Real(meixner_ledoux(rq(2), rq(1, 3), 1, 2), D)) < pow10(-30, D));
}

TEST_CASE("Krawtchouk double sum and the Meixner substitution") {
    CHECK(krawtchouk_ledoux(3, rq(1, 2), 2, 1) == rq(3, 2));
    CHECK(krawtchouk_ledoux(9, rq(1, 4), 0, 4) == rq(1));
    // brute-force check: K=4, p=1/3, N=2, k=1 gives 3/2
    CHECK(krawtchouk_ledoux(4, rq(1, 3), 1, 2) == rq(3, 2));
    auto oracle = factorial_moment_oracle({Krawtchouk{4, rq(1, 3)}, 2}, 1, 4, D);
    CHECK(abs_diff(oracle.value, Real(krawtchouk_ledoux(4, rq(1, 3), 1, 2), D)) < pow10(-40, D));
    // falling factorials vanish on the support once k exceeds K
    CHECK(krawtchouk_ledoux(3, rq(1, 2), 5, 2) == rq(0));

    for (long K : {3L, 7L, 12L})
        for (const auto& p : {rq(1, 4), rq(1, 2), rq(2, 3)})
            for (long N = 1; N <= K; ++N)
                for (unsigned long k = 0; k <= 8; ++k)
                    CHECK(krawtchouk_via_meixner(K, p, k, N) == krawtchouk_ledoux(K, p, k, N));
}

TEST_CASE("hypergeometric forms equal the double sums exactly") {
    for (const auto& theta : {rq(1, 3), rq(1), rq(5, 2)})
        for (unsigned long k = 0; k <= 20; ++k)
            for (long N = 1; N <= 10; ++N)
                CHECK(charlier_hyper(theta, k, N) == charlier_ledoux(theta, k, N));

    for (const auto& q : {rq(1, 4), rq(1, 2), rq(9, 10)})
        for (unsigned long k = 0; k <= 20; ++k)
            for (long N = 1; N <= 10; ++N)
                CHECK(meixner1_hyper(q, k, N) == meixner_ledoux(rq(1), q, k, N));
}

TEST_CASE("listed closed forms for small N") {
    CHECK(charlier_hyper(rq(2), 1, 1) == rq(2));
    CHECK(charlier_hyper(rq(1), 4, 3) == rq(41));
    CHECK(meixner1_hyper(rq(1, 2), 2, 1) == rq(2));
    CHECK(meixner1_hyper(rq(1, 2), 1, 2) == rq(5, 2));
    for (long k = 0; k <= 12; ++k) {
        for (const auto& theta : {rq(1, 2), rq(3)}) {
            CHECK(charlier_hyper(theta, static_cast<unsigned long>(k), 1) == pow(theta, k));
            CHECK(charlier_hyper(theta, static_cast<unsigned long>(k), 2) ==
                  charlier_listed_N2(theta, k));
            CHECK(charlier_hyper(theta, static_cast<unsigned long>(k), 3) ==
                  charlier_listed_N3(theta, k));
        }
        for (const auto& q : {rq(1, 4), rq(1, 2)})
            for (long N = 1; N <= 3; ++N)
                CHECK(meixner1_hyper(q, static_cast<unsigned long>(k), N) ==
                      meixner1_listed(q, k, N));
    }
}

TEST_CASE("double sums match the lattice oracle") {
    struct Case {
        EnsembleParams params;
        Rational (*closed)(long N, unsigned long k);
    };
    for (long N = 1; N <= 3; ++N) {
        for (unsigned long k = 0; k <= 5; ++k) {
            auto c = factorial_moment_oracle({Charlier{rq(1)}, N}, k, 300, D);
            CHECK(abs_diff(c.value, Real(charlier_ledoux(rq(1), k, N), D)) < pow10(-10, D));
            auto m = factorial_moment_oracle({Meixner{rq(2), rq(1, 3)}, N}, k, 300, D);
            CHECK(abs_diff(m.value, Real(meixner_ledoux(rq(2), rq(1, 3), k, N), D)) < pow10(-10, D));
            auto kr = factorial_moment_oracle({Krawtchouk{8, rq(1, 3)}, N}, k, 8, D);
            CHECK(abs_diff(kr.value, Real(krawtchouk_ledoux(8, rq(1, 3), k, N), D)) < pow10(-10, D));
        }
        for (unsigned long k = 0; k <= 3; ++k) {
            auto c = coulomb_oracle(Charlier{rq(1)}, N, k, 60, D);
            CHECK(abs_diff(c.moment, Real(charlier_ledoux(rq(1), k, N), D)) < pow10(-8, D));
            auto m = coulomb_oracle(Meixner{rq(2), rq(1, 3)}, N, k, 90, D);
            CHECK(abs_diff(m.moment, Real(meixner_ledoux(rq(2), rq(1, 3), k, N), D)) < pow10(-8, D));
            auto kr = coulomb_oracle(Krawtchouk{8, rq(1, 3)}, N, k, 8, D);
            CHECK(abs_diff(kr.moment, Real(krawtchouk_ledoux(8, rq(1, 3), k, N), D)) < pow10(-8, D));
        }
    }
}

TEST_CASE("pochhammer partial-sum identity") {
    CHECK(pochsum_check(0, 0, 3));
    CHECK(pochsum_check(1, 2, 4));
    for (long N = 1; N <= 12; ++N)
        for (unsigned long i = 0; i < static_cast<unsigned long>(N); ++i)
            for (unsigned long k = 0; k <= 12; ++k) CHECK(pochsum_check(i, k, N));
}

TEST_CASE("moments interpolate as polynomials in k") {
    Poly one_c = interpolate_normalized_in_k(CharlierFamily{rq(3, 2)}, 1);
    CHECK(one_c == Poly(rq(1)));

    Poly c2 = interpolate_normalized_in_k(CharlierFamily{rq(1)}, 2);
    // theta^{-k} M^theta(k,2) = (k^2 + 2 theta)/(2 theta) at theta = 1
    Poly k = Poly::variable();
    CHECK(c2 == rq(1, 2) * (k * k) + Poly(rq(1)));

    Poly m2 = interpolate_normalized_in_k(Meixner1Family{rq(1, 2)}, 2);
    CHECK(m2 == rq(2) * (k * k) + k + Poly(rq(2)));

    for (long N = 1; N <= 5; ++N) {
        CHECK(interpolate_normalized_in_k(CharlierFamily{rq(5, 2)}, N).degree() <= 2 * (N - 1));
        CHECK(interpolate_normalized_in_k(Meixner1Family{rq(1, 4)}, N).degree() <= 2 * (N - 1));
    }
}

TEST_CASE("moments interpolate as polynomials in N-1") {
    CHECK(interpolate_in_Nminus1(CharlierFamily{rq(2)}, 0) == Poly(rq(1)));
    // M^theta(1, N) = theta + (N-1)/2
    Poly n = Poly::variable();
    CHECK(interpolate_in_Nminus1(CharlierFamily{rq(1)}, 1) == rq(1, 2) * n + Poly(rq(1)));
    CHECK(interpolate_in_Nminus1(Meixner1Family{rq(1, 3)}, 0) == Poly(rq(1)));
    for (unsigned long k = 0; k <= 5; ++k) {
        CHECK(interpolate_in_Nminus1(CharlierFamily{rq(1, 3)}, k).degree() <=
              static_cast<int>(k));
        CHECK(interpolate_in_Nminus1(Meixner1Family{rq(2, 3)}, k).degree() <=
              static_cast<int>(k));
    }
}

TEST_CASE("formal Meixner evaluation stays exact") {
    // negative gamma and q outside (0,1), purely algebraic
    Rational v = meixner_ledoux(rq(-5), rq(-3, 2), 2, 3);
    CHECK(v.get_den() > 0);
    CHECK_THROWS_AS(meixner_ledoux(rq(1), rq(1), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk_ledoux(3, rq(1, 2), 1, 4), std::invalid_argument);
}
