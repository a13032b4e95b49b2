#include "doctest.h"
#include "ope/ensembles.hpp"

using namespace ope;

namespace {
Rational rq(long n, long d = 1) { return make_rational(n, d); }
const int D = 70;  // working digits for the oracle sums in this suite
}  // namespace

TEST_CASE("reference measures") {
    Real e_inv = Real(1L, D) / Real::exp(Real(1L, D));
    CHECK(abs_diff(reference_pmf(Charlier{rq(1)}, 0, D), e_inv) < pow10(-60, D));

    CHECK(reference_pmf(Meixner{rq(1), rq(1, 2)}, 2, D) == Real(rq(1, 8), D));
    CHECK(reference_pmf(Krawtchouk{3, rq(1, 2)}, 1, D) == Real(rq(3, 8), D));
    CHECK_THROWS_AS(reference_pmf(Krawtchouk{3, rq(1, 2)}, 4, D), std::domain_error);

    // non-integer gamma goes through the high-precision pow path
    Real p0 = reference_pmf(Meixner{rq(3, 2), rq(1, 2)}, 0, D);
    CHECK(abs_diff(p0 * p0, Real(rq(1, 8), D)) < pow10(-60, D));

    CHECK_THROWS_AS(validate_distribution(EnsembleParams{Meixner{rq(1), rq(3, 2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_distribution(EnsembleParams{Charlier{rq(-1)}}),
                    std::invalid_argument);
}

TEST_CASE("squared normalised polynomials") {
    for (unsigned long x : {0ul, 3ul, 17ul}) {
        CHECK(poly_squared(Charlier{rq(5, 3)}, 0, x) == rq(1));
        CHECK(poly_squared(Meixner{rq(2), rq(1, 3)}, 0, x) == rq(1));
    }
    CHECK(poly_squared(Charlier{rq(1)}, 1, 0) == rq(1));
    // c_1(x;theta) = sqrt(theta) (1 - x/theta)
    CHECK(poly_squared(Charlier{rq(2)}, 1, 3) == rq(2) * rq(1, 4));
    CHECK(poly_squared(Krawtchouk{3, rq(1, 2)}, 1, 0) == rq(3));
    CHECK_THROWS_AS(poly_squared(Krawtchouk{3, rq(1, 2)}, 4, 1), std::domain_error);
}

TEST_CASE("Krawtchouk polynomials from formal Meixner parameters") {
    const long K = 6;
    const Rational p = rq(1, 3);
    EnsembleParams kr{Krawtchouk{K, p}};
    EnsembleParams formal{Meixner{Rational(-K), -p / (Rational(1) - p)}};
    for (unsigned long n = 0; n <= 6; ++n)
        for (unsigned long x = 0; x <= 6; ++x)
            CHECK(poly_squared(kr, n, x) == poly_squared(formal, n, x));
}

TEST_CASE("one-point density") {
    OnePointSpec single{Charlier{rq(3, 2)}, 1};
    for (unsigned long x : {0ul, 2ul, 5ul})
        CHECK(one_point_density(single, x, D) == reference_pmf(Charlier{rq(3, 2)}, x, D));

    OnePointSpec two{Charlier{rq(1)}, 2};
    Real e_inv = Real(1L, D) / Real::exp(Real(1L, D));
    CHECK(abs_diff(one_point_density(two, 0, D), e_inv) < pow10(-60, D));

    OnePointSpec kr{Krawtchouk{7, rq(2, 5)}, 3};
    Real total(0L, D);
    for (unsigned long x = 0; x <= 7; ++x) total += one_point_density(kr, x, D);
    CHECK(abs_diff(total, Real(1L, D)) < pow10(-50, D));

    CHECK_THROWS_AS(validate(OnePointSpec{Krawtchouk{3, rq(1, 2)}, 5}), std::invalid_argument);
}

TEST_CASE("densities are probability measures") {
    std::vector<OnePointSpec> specs;
    for (long n = 1; n <= 4; ++n) {
        specs.push_back({Charlier{rq(1)}, n});
        specs.push_back({Meixner{rq(3, 2), rq(1, 2)}, n});
        specs.push_back({Krawtchouk{8, rq(1, 3)}, n});
    }
    for (const auto& spec : specs) {
        long end = std::holds_alternative<Krawtchouk>(spec.params) ? 8 : 300;
        Real total(0L, D);
        for (long x = 0; x <= end; ++x)
            total += one_point_density(spec, static_cast<unsigned long>(x), D);
        CHECK(abs_diff(total, Real(1L, D)) < pow10(-25, D));
    }
}

TEST_CASE("factorial moment oracle") {
    auto [m1, tail1] = factorial_moment_oracle({Charlier{rq(2)}, 1}, 1, 200, D);
    CHECK(abs_diff(m1, Real(rq(2), D)) < pow10(-30, D));
    CHECK(tail1 < pow10(-30, D));

    auto [m0, tail0] = factorial_moment_oracle({Meixner{rq(2), rq(1, 3)}, 2}, 0, 200, D);
    CHECK(abs_diff(m0, Real(1L, D)) < pow10(-30, D));

    // M^theta(1,N) = theta + (N-1)/2
    auto [m3, tail3] = factorial_moment_oracle({Charlier{rq(2)}, 3}, 1, 200, D);
    CHECK(abs_diff(m3, Real(rq(3), D)) < pow10(-30, D));

    auto [mk, tailk] = factorial_moment_oracle({Krawtchouk{5, rq(1, 4)}, 2}, 0, 9999, D);
    CHECK(abs_diff(mk, Real(1L, D)) < pow10(-50, D));
    CHECK(tailk.is_zero());

    CHECK_THROWS_AS(factorial_moment_oracle({Charlier{rq(1)}, 1}, 5, 3, D),
                    std::invalid_argument);
}

TEST_CASE("Coulomb-gas configuration sum") {
    // N=1 reduces exactly to the one-point oracle
    auto res1 = coulomb_oracle(Charlier{rq(3, 2)}, 1, 2, 80, D);
    auto direct = factorial_moment_oracle({Charlier{rq(3, 2)}, 1}, 2, 80, D);
    CHECK(abs_diff(res1.moment, direct.value) < pow10(-45, D));

    auto res2 = coulomb_oracle(Charlier{rq(1)}, 2, 1, 60, D);
    CHECK(abs_diff(res2.moment, Real(rq(3, 2), D)) < pow10(-20, D));

    // x_max = 1, N = 2: only the configuration (0,1) contributes, Z = 2 mu(0) mu(1)
    auto tiny = coulomb_oracle(Charlier{rq(1)}, 2, 0, 1, D);
    Real mu0 = reference_pmf(Charlier{rq(1)}, 0, D), mu1 = reference_pmf(Charlier{rq(1)}, 1, D);
    CHECK(abs_diff(tiny.normalisation, Real(2L, D) * mu0 * mu1) < pow10(-50, D));

    CHECK_THROWS_AS(coulomb_oracle(Charlier{rq(1)}, 3, 0, 1, D), std::invalid_argument);
}

TEST_CASE("one-point and Coulomb oracles agree") {
    std::vector<unsigned long> ks{0, 1, 2, 3, 4};
    struct Case {
        EnsembleParams params;
        long coulomb_xmax;
        long onept_xmax;
    };
    std::vector<Case> cases = {
        {Charlier{rq(1)}, 60, 300},
        {Meixner{rq(2), rq(1, 3)}, 90, 300},
        {Krawtchouk{8, rq(1, 3)}, 8, 8},
    };
    for (const auto& c : cases) {
        for (long N = 1; N <= 3; ++N) {
            auto coul = coulomb_oracle_multi(c.params, N, ks, c.coulomb_xmax, D);
            for (size_t j = 0; j < ks.size(); ++j) {
                auto onept = factorial_moment_oracle({c.params, N}, ks[j], c.onept_xmax, D);
                CHECK(abs_diff(coul[j].moment, onept.value) < pow10(-10, D));
            }
        }
    }
}

TEST_CASE("orthonormality defects") {
    CHECK(orthonormality_defect(Charlier{rq(1)}, 0, 0, 100, D) < pow10(-50, D));
    CHECK(orthonormality_defect(Charlier{rq(1)}, 0, 1, 100, D) < pow10(-30, D));
    CHECK(orthonormality_defect(Krawtchouk{5, rq(1, 3)}, 2, 2, 5, D) < pow10(-50, D));

    std::vector<EnsembleParams> all = {Charlier{rq(1)}, Meixner{rq(3, 2), rq(1, 2)},
                                       Krawtchouk{9, rq(2, 5)}};
    for (const auto& params : all) {
        long x_max = std::holds_alternative<Meixner>(params) ? 280 : 200;
        for (unsigned long m = 0; m <= 6; ++m)
            for (unsigned long n = m; n <= 6; ++n)
                CHECK(orthonormality_defect(params, m, n, x_max, D) < pow10(-25, D));
    }
}

TEST_CASE("default truncation bounds") {
    CHECK(default_x_max(Charlier{rq(1)}, 1) == 200);
    CHECK(default_x_max(Charlier{rq(30)}, 2) == 1200);
    CHECK(default_x_max(Krawtchouk{12, rq(1, 2)}, 3) == 12);
}
