#include "doctest.h"
#include "ope/randomised.hpp"

using namespace ope;

namespace {
Rational rq(long n, long d = 1) { return make_rational(n, d); }
const int D = 70;

Poly listed_poissonised(const Rational& theta, unsigned long k) {
    // the four printed Poissonised moment polynomials
    std::vector<std::vector<long>> coeffs = {
        {2, 1}, {3, 6, 1}, {4, 18, 12, 1}, {5, 40, 60, 20, 1}};
    std::vector<Rational> c;
    for (long v : coeffs[k - 1]) c.emplace_back(v);
    return pow(theta, static_cast<long>(k)) / Rational(static_cast<long>(k) + 1) *
           Poly(std::move(c));
}
}  // namespace

TEST_CASE("Jacobi and Legendre evaluation") {
    CHECK(jacobi_eval({rq(1), rq(0), 3}, rq(1)) == rq(4));
    CHECK(jacobi_eval({rq(1), rq(0), 1}, rq(3)) == rq(5));
    CHECK(jacobi_eval({rq(0), rq(0), 2}, rq(1, 2)) == rq(-1, 8));
    CHECK(legendre_eval(7, rq(1)) == rq(1));
    CHECK(legendre_eval(1, rq(7, 2)) == rq(7, 2));
    CHECK(legendre_eval(2, rq(0)) == rq(-1, 2));

    Poly x = Poly::variable();
    CHECK(legendre_poly(2) == rq(3, 2) * (x * x) - Poly(rq(1, 2)));
    CHECK(jacobi_poly({rq(1), rq(0), 1}) == rq(3, 2) * x + Poly(rq(1, 2)));
    for (unsigned long n = 0; n <= 8; ++n)
        CHECK(jacobi_poly({rq(1), rq(0), n}).eval(rq(2, 7)) ==
              jacobi_eval({rq(1), rq(0), n}, rq(2, 7)));
}

TEST_CASE("Poissonised Charlier moment polynomials") {
    Poly t = Poly::variable();
    CHECK(poissonised_charlier(rq(1), 1) == rq(1, 2) * t + Poly(rq(1)));
    CHECK(poissonised_charlier(rq(2), 2) == listed_poissonised(rq(2), 2));
    for (unsigned long k = 1; k <= 4; ++k) {
        CHECK(poissonised_charlier(rq(1), k) == listed_poissonised(rq(1), k));
        CHECK(poissonised_charlier(rq(1, 2), k) == listed_poissonised(rq(1, 2), k));
    }
    for (unsigned long k = 0; k <= 10; ++k)
        CHECK(poissonised_charlier(rq(5, 3), k).eval(rq(0)) == pow(rq(5, 3), static_cast<long>(k)));
}

TEST_CASE("Jacobi form of the Poissonised moment") {
    for (const auto& theta : {rq(1, 2), rq(1), rq(3)})
        for (unsigned long k = 0; k <= 25; ++k)
            CHECK(poissonised_charlier_jacobi(theta, k) ==
                  RatFunc(poissonised_charlier(theta, k)));
}

TEST_CASE("Catalan specialisation at t = 1") {
    CHECK(catalan_number(0) == rq(1));
    CHECK(catalan_number(3) == rq(5));
    CHECK(catalan_poissonised(rq(1), 2) == rq(10, 3));
    CHECK(catalan_poissonised(rq(1), 0) == rq(1));
    CHECK(catalan_poissonised(rq(1), 3) == rq(35, 4));
    for (unsigned long k = 0; k <= 20; ++k) {
        CHECK(poissonised_charlier(rq(1), k).eval(rq(1)) == catalan_poissonised(rq(1), k));
        CHECK(poissonised_charlier(rq(7, 2), k).eval(rq(1)) == catalan_poissonised(rq(7, 2), k));
    }
}

TEST_CASE("negative binomialised Meixner moment") {
    CHECK(nb_meixner(rq(1, 3), 0) == RatFunc(Poly(rq(1))));
    CHECK(nb_meixner(rq(1, 2), 1).eval(rq(1)) == rq(4));
    for (const auto& q : {rq(1, 4), rq(1, 2), rq(3, 4)})
        for (unsigned long k = 0; k <= 25; ++k)
            CHECK(nb_meixner(q, k) == nb_meixner_legendre(q, k));
    // value at t = 0 is k! (q/(1-q))^k
    for (unsigned long k = 0; k <= 8; ++k)
        CHECK(nb_meixner(rq(2, 5), k).eval(rq(0)) ==
              Rational(factorial(k)) * pow(rq(2, 3), static_cast<long>(k)));
    for (unsigned long k = 0; k <= 20; ++k) {
        CHECK(nb_meixner(rq(1, 2), k).eval(rq(1)) == catalan_nb_meixner(rq(1, 2), k));
        CHECK(nb_meixner(rq(1, 4), k).eval(rq(1)) == catalan_nb_meixner(rq(1, 4), k));
    }
}

TEST_CASE("Chu-Vandermonde step") {
    for (unsigned long k = 0; k <= 30; ++k) CHECK(chu_vandermonde_check(k));
}

TEST_CASE("Exton identity defect") {
    CHECK(exton_defect(rq(-1), rq(-1), rq(2), rq(1), rq(1, 2), 80, D) < pow10(-30, D));
    CHECK(exton_defect(rq(-2), rq(-2), rq(2), rq(2), rq(1, 3), 100, D) < pow10(-30, D));
    CHECK(exton_defect(rq(-3), rq(1, 2), rq(3, 2), rq(1), rq(0), 10, D).is_zero());
    // non-terminating left side
    CHECK(exton_defect(rq(1, 2), rq(1, 3), rq(5, 4), rq(2), rq(1, 4), 220, D) < pow10(-25, D));
}

TEST_CASE("randomisation oracles approach the closed forms") {
    auto p1 = poissonisation_oracle(rq(1), 1, rq(1), 120, D);
    CHECK(abs_diff(p1.value, Real(rq(3, 2), D)) < pow10(-25, D));
    auto p0 = poissonisation_oracle(rq(2, 3), 0, rq(5, 4), 120, D);
    CHECK(abs_diff(p0.value, Real(1L, D)) < pow10(-25, D));
    auto p2 = poissonisation_oracle(rq(2), 2, rq(1, 2), 150, D);
    CHECK(abs_diff(p2.value, Real(rq(25, 3), D)) < pow10(-25, D));

    auto n1 = nb_oracle(rq(1, 2), 1, rq(1), 400, D);
    CHECK(abs_diff(n1.value, Real(rq(4), D)) < pow10(-20, D));
    auto n0 = nb_oracle(rq(1, 3), 0, rq(1, 2), 300, D);
    CHECK(abs_diff(n0.value, Real(1L, D)) < pow10(-20, D));
    auto n2 = nb_oracle(rq(1, 3), 2, rq(1, 2), 400, D);
    CHECK(abs_diff(n2.value, Real(nb_meixner(rq(1, 3), 2).eval(rq(1, 2)), D)) < pow10(-20, D));

    CHECK_THROWS_AS(nb_oracle(rq(1, 2), 1, rq(2), 10, D), std::invalid_argument);
}

TEST_CASE("three-term recurrences hold as exact identities in t") {
    for (const auto& theta : {rq(1), rq(3), rq(1, 2)})
        for (unsigned long k = 1; k <= 30; ++k)
            CHECK(recurrence_residual_charlier(theta, k).is_zero());
    for (const auto& q : {rq(1, 2), rq(1, 4), rq(2, 3)})
        for (unsigned long k = 1; k <= 30; ++k)
            CHECK(recurrence_residual_meixner(q, k).is_zero());
}

TEST_CASE("transformed Jacobi ODE residual vanishes") {
    for (unsigned long k = 0; k <= 25; ++k) CHECK(ode_residual_jacobi_substituted(k).is_zero());
}

TEST_CASE("printed equations adjudicated by exact residuals") {
    // the printed Poissonised-Charlier ODE fails already at k=1: at t=0 the
    // residual of M = theta(t+2)/2 is (5/4) theta + theta
    RatFunc r1 = printed_charlier_ode_residual(rq(1), 1);
    CHECK(!r1.is_zero());
    CHECK(r1.eval(rq(0)) == rq(5, 4) + rq(1));

    // printed Legendre recurrence: residual is a nonzero polynomial at k=1
    Poly lr = printed_legendre_recurrence_residual(1);
    CHECK(!lr.is_zero());
    Poly x = Poly::variable();
    CHECK(lr == rq(-2) * (x * x) + rq(2) * x);

    // printed Legendre ODE: k=1 happens to pass, k>=2 fails
    CHECK(printed_legendre_ode_residual(1).is_zero());
    CHECK(!printed_legendre_ode_residual(2).is_zero());

    // base Jacobi ODE as printed is correct
    for (unsigned long k = 0; k <= 25; ++k) CHECK(jacobi_ode_residual(k).is_zero());

    // standard-reference forms all hold
    for (unsigned long k = 1; k <= 25; ++k) {
        CHECK(legendre_recurrence_standard_residual(k).is_zero());
        CHECK(legendre_ode_standard_residual(k).is_zero());
        CHECK(jacobi10_recurrence_residual(k).is_zero());
    }

    auto report = adjudicate_printed_equations(rq(1), rq(1, 2), {1, 2, 3});
    CHECK(report.size() == 15);
    for (const auto& entry : report) {
        CHECK(!entry.equation.empty());
        CHECK(!entry.residual.empty());
    }
}

TEST_CASE("Legendre rational functions") {
    CHECK(legendre_rational(0, rq(1)).coefficient == rq(1, 2));
    CHECK(legendre_rational(1, rq(1)).coefficient == rq(0));
    CHECK(legendre_rational(2, rq(3)).coefficient == rq(-1, 32));
    CHECK_THROWS_AS(legendre_rational(1, rq(-1)), std::domain_error);
}
