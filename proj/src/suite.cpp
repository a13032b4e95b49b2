#include "ope/suite.hpp"

#include <random>
#include <sstream>

#include "ope/ensembles.hpp"
#include "ope/equilibrium.hpp"
#include "ope/hypergeometric.hpp"
#include "ope/moments.hpp"
#include "ope/randomised.hpp"
#include "ope/schur.hpp"

namespace ope {

namespace {

Rational rq(long n, long d = 1) { return make_rational(n, d); }

struct Check {
    bool ok = true;
    long cases = 0;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
    std::string details(const std::string& extra = "") const {
        std::ostringstream os;
        os << cases << " checks";
        if (!extra.empty()) os << "; " << extra;
        if (!ok) os << "; first failure: " << why.str();
        return os.str();
    }
};

CriterionResult route_equality(int) {
    Check c;
    for (const auto& theta : {rq(1, 3), rq(1), rq(5, 2)})
        for (unsigned long k = 0; k <= 20; ++k)
            for (long N = 1; N <= 10; ++N)
                c.expect(charlier_hyper(theta, k, N) == charlier_ledoux(theta, k, N),
                         "charlier theta=" + to_string(theta) + " k=" + std::to_string(k) +
                             " N=" + std::to_string(N));
    for (const auto& q : {rq(1, 4), rq(1, 2), rq(9, 10)})
        for (unsigned long k = 0; k <= 20; ++k)
            for (long N = 1; N <= 10; ++N)
                c.expect(meixner1_hyper(q, k, N) == meixner_ledoux(rq(1), q, k, N),
                         "meixner q=" + to_string(q) + " k=" + std::to_string(k) +
                             " N=" + std::to_string(N));
    return {1, "hypergeometric forms equal the double sums exactly", c.ok, false, c.details()};
}

CriterionResult krawtchouk_routes(int digits) {
    Check c;
    for (long K : {3L, 7L, 12L})
        for (const auto& p : {rq(1, 4), rq(1, 2), rq(2, 3)})
            for (long N = 1; N <= K; ++N)
                for (unsigned long k = 0; k <= 8; ++k)
                    c.expect(krawtchouk_via_meixner(K, p, k, N) == krawtchouk_ledoux(K, p, k, N),
                             "substitution K=" + std::to_string(K));
    for (long K : {4L, 8L})
        for (const auto& p : {rq(1, 4), rq(1, 2)})
            for (long N = 1; N <= 3; ++N) {
                std::vector<unsigned long> ks{0, 1, 2, 3};
                auto coul = coulomb_oracle_multi(Krawtchouk{K, p}, N, ks, K, digits);
                for (unsigned long k = 0; k <= 3; ++k) {
                    Real closed(krawtchouk_ledoux(K, p, k, N), digits);
                    auto onept = factorial_moment_oracle({Krawtchouk{K, p}, N}, k, K, digits);
                    c.expect(abs_diff(onept.value, closed) < pow10(-10, digits),
                             "one-point oracle K=" + std::to_string(K));
                    c.expect(abs_diff(coul[k].moment, closed) < pow10(-8, digits),
                             "coulomb oracle K=" + std::to_string(K));
                }
            }
    return {2, "krawtchouk: substitution identity and lattice oracles", c.ok, false, c.details()};
}

CriterionResult listed_polynomials(int) {
    Check c;
    Poly k = Poly::variable();
    for (const auto& theta : {rq(1, 2), rq(1), rq(3)}) {
        Poly n2 = interpolate_normalized_in_k(CharlierFamily{theta}, 2);
        c.expect(n2 == rq(1, 2) / theta * (k * k) + Poly(rq(1)), "charlier N=2 polynomial");
        Poly n3 = interpolate_normalized_in_k(CharlierFamily{theta}, 3);
        Rational t2 = theta * theta;
        Poly expect3 = rq(1, 6) / t2 *
                       (k.pow(4) - rq(2) * k.pow(3) + (rq(6) * theta + rq(1)) * (k * k)) +
                       Poly(rq(1));
        c.expect(n3 == expect3, "charlier N=3 polynomial");
    }
    for (const auto& q : {rq(1, 4), rq(1, 2)}) {
        // normalised with the (k+1)_N/(N+1)_k weight, which clears the
        // (k+2)_{N-1} poles; numerators match the listed forms
        Poly m2 = interpolate_normalized_in_k(Meixner1Family{q}, 2);
        c.expect(m2 == rq(1) / q * (k * k) + k + Poly(rq(2)), "meixner N=2 polynomial");
        Poly m3 = interpolate_normalized_in_k(Meixner1Family{q}, 3);
        Rational q2 = q * q;
        Poly expect_m3 =
            rq(1, 2) / q2 *
            (k.pow(4) + (rq(4) * q - rq(2)) * k.pow(3) +
             (rq(2) * q2 + rq(8) * q + rq(1)) * (k * k) + rq(10) * q2 * k) +
            Poly(rq(6));
        c.expect(m3 == expect_m3, "meixner N=3 polynomial");
        for (unsigned long kk = 0; kk <= 12; ++kk) {
            Rational base = pow(q / (rq(1) - q), static_cast<long>(kk));
            Rational lk(static_cast<long>(kk));
            c.expect(meixner1_hyper(q, kk, 1) ==
                         base * rising_factorial(rq(2), kk) / (lk + 1),
                     "listed M1(k,1)");
            c.expect(meixner1_hyper(q, kk, 2) ==
                         base * rising_factorial(rq(3), kk) * (lk * lk + lk * q + rq(2) * q) /
                             ((lk + 1) * (lk + 2) * q),
                     "listed M1(k,2)");
        }
    }
    Poly t = Poly::variable();
    std::vector<std::vector<long>> coeffs = {{2, 1}, {3, 6, 1}, {4, 18, 12, 1}, {5, 40, 60, 20, 1}};
    for (const auto& theta : {rq(1), rq(5, 2)})
        for (unsigned long kk = 1; kk <= 4; ++kk) {
            std::vector<Rational> cs;
            for (long v : coeffs[kk - 1]) cs.emplace_back(v);
            Poly listed = pow(theta, static_cast<long>(kk)) /
                          Rational(static_cast<long>(kk) + 1) * Poly(std::move(cs));
            c.expect(poissonised_charlier(theta, kk) == listed, "poissonised polynomial");
        }
    return {3, "listed moment polynomials reproduced exactly", c.ok, false, c.details()};
}

CriterionResult catalan_specialisations(int) {
    Check c;
    for (unsigned long k = 0; k <= 20; ++k) {
        for (const auto& theta : {rq(1), rq(7, 2)})
            c.expect(poissonised_charlier(theta, k).eval(rq(1)) == catalan_poissonised(theta, k),
                     "poissonised at t=1, k=" + std::to_string(k));
        for (const auto& q : {rq(1, 4), rq(1, 2), rq(2, 3)})
            c.expect(nb_meixner(q, k).eval(rq(1)) == catalan_nb_meixner(q, k),
                     "negative binomialised at t=1, k=" + std::to_string(k));
    }
    return {4, "catalan specialisations at t=1", c.ok, false, c.details()};
}

CriterionResult identity_suites(int) {
    Check c;
    for (unsigned long k = 1; k <= 30; ++k) {
        for (const auto& theta : {rq(1), rq(1, 2), rq(3)})
            c.expect(recurrence_residual_charlier(theta, k).is_zero(),
                     "charlier recurrence k=" + std::to_string(k));
        for (const auto& q : {rq(1, 4), rq(1, 2), rq(2, 3)})
            c.expect(recurrence_residual_meixner(q, k).is_zero(),
                     "meixner recurrence k=" + std::to_string(k));
    }
    for (unsigned long k = 0; k <= 30; ++k)
        c.expect(ode_residual_jacobi_substituted(k).is_zero(),
                 "transformed jacobi ODE k=" + std::to_string(k));
    return {5, "three-term recurrences and transformed ODE identically zero, k <= 30", c.ok,
            false, c.details()};
}

CriterionResult printed_equation_report(int) {
    Check c;
    std::ostringstream os;
    auto report = adjudicate_printed_equations(rq(1), rq(1, 2), {1, 2, 3});
    c.expect(report.size() == 15, "report size");
    for (const auto& entry : report) {
        c.expect(!entry.residual.empty(), "missing residual");
        os << entry.equation << " k=" << entry.k << ": "
           << (entry.identically_zero ? "holds" : "fails, residual " + entry.residual) << " | ";
    }
    return {6, "printed-equation adjudication report generated", c.ok, true, os.str()};
}

CriterionResult randomisation_oracles(int digits) {
    Check c;
    for (const auto& theta : {rq(1, 2), rq(1), rq(2)})
        for (unsigned long k : {1ul, 2ul, 4ul})
            for (const auto& t : {rq(1, 2), rq(1), rq(3, 2)}) {
                auto got = poissonisation_oracle(theta, k, t, 400, digits);
                Real closed(poissonised_charlier(theta, k).eval(t), digits);
                c.expect(abs_diff(got.value, closed) < pow10(-20, digits),
                         "poissonisation theta=" + to_string(theta));
            }
    for (const auto& q : {rq(1, 5), rq(1, 3), rq(1, 2)})
        for (unsigned long k : {1ul, 2ul, 4ul})
            for (const auto& t : {rq(1, 2), rq(1), rq(3, 2)}) {
                auto got = nb_oracle(q, k, t, 400, digits);
                Real closed(nb_meixner(q, k).eval(t), digits);
                c.expect(abs_diff(got.value, closed) < pow10(-20, digits),
                         "negative binomialisation q=" + to_string(q));
            }
    std::mt19937_64 rng(0xce11);
    std::uniform_int_distribution<long> ab(-6, -1), cpick(1, 5), tpick(1, 4), thpick(1, 6);
    for (int i = 0; i < 20; ++i) {
        Rational a(ab(rng)), b(ab(rng));
        Rational cc = rq(2 * cpick(rng) + 1, 2);  // avoids nonpositive integers
        Rational theta = rq(thpick(rng), 2);
        Rational t = rq(tpick(rng), 8);  // |t| <= 1/2
        c.expect(exton_defect(a, b, cc, theta, t, 200, digits) < pow10(-25, digits),
                 "exton tuple " + std::to_string(i));
    }
    return {7, "randomisation oracles match closed forms", c.ok, false, c.details()};
}

CriterionResult equilibrium_checks(int digits) {
    Check c;
    for (const auto& h : {rq(1, 2), rq(1), rq(3)})
        for (unsigned long k = 0; k <= 12; ++k)
            c.expect(charlier_eq_moment(h, k) == charlier_eq_moment_oracle(h, k),
                     "charlier h=" + to_string(h));
    for (const auto& q : {rq(1, 4), rq(1, 2), rq(3, 4)})
        for (unsigned long k = 0; k <= 12; ++k)
            c.expect(meixner1_eq_moment(q, k) == meixner1_eq_moment_oracle(q, k),
                     "meixner1 q=" + to_string(q));
    for (const auto& q : {rq(1, 4), rq(1, 2)})
        for (const auto& cc : {rq(0), rq(1), rq(2)})
            for (unsigned long k = 0; k <= 8; ++k) {
                c.expect(meixner_general_eq_moment(q, cc, k) ==
                             meixner_general_eq_moment_oracle(q, cc, k),
                         "meixner general q=" + to_string(q));
                if (cc == 0)
                    c.expect(meixner_general_eq_moment(q, cc, k) == meixner1_eq_moment(q, k),
                             "c=0 reduction");
            }
    for (const auto& kappa : {rq(3, 2), rq(2), rq(4)})
        for (const auto& p : {rq(1, 4), rq(1, 2)})
            for (unsigned long k = 0; k <= 8; ++k)
                c.expect(krawtchouk_eq_moment(kappa, p, k) ==
                             krawtchouk_eq_moment_oracle(kappa, p, k),
                         "krawtchouk kappa=" + to_string(kappa));

    for (const auto& theta : {rq(1, 2), rq(1), rq(3), rq(13, 4)})
        for (const auto& h : {rq(1, 3), rq(1), rq(2), rq(11, 5)})
            for (unsigned long k = 0; k <= 5; ++k)
                c.expect(charlier_correspondence(theta, h, k), "correspondence");
    for (unsigned long k = 0; k <= 5; ++k) {
        Rational h = rq(3, 2);
        Rational ref = poissonised_charlier(rq(1), k).eval(rq(1) / h) /
                       pow(rq(1) / h, static_cast<long>(k));
        for (const auto& theta : {rq(2), rq(7, 3), rq(11)})
            c.expect(poissonised_charlier(theta, k).eval(rq(1) / h) /
                             pow(theta / h, static_cast<long>(k)) ==
                         ref,
                     "theta-independence");
    }

    std::vector<Rational> ts{rq(1), rq(8, 5), rq(19, 10), rq(199, 100)};
    for (unsigned long k : {1ul, 2ul}) {
        auto rep = meixner_limit_correspondence(rq(1, 2), k, ts, 9000, digits);
        c.expect(!rep.diverged && rep.gaps_decreasing,
                 "limit gaps not decreasing, k=" + std::to_string(k));
        c.expect(rep.limit == meixner1_eq_moment(rq(1, 2), k), "limit value");
        for (const auto& pt : rep.points)
            c.expect(pt.rearrangement_gap < pow10(-15, digits), "rearrangement");
    }
    return {8, "equilibrium moments: closed forms, oracles, correspondences", c.ok, false,
            c.details()};
}

CriterionResult schur_route(int digits) {
    Check c;
    std::ostringstream adjudication;
    for (const auto& theta : {rq(1, 4), rq(1, 2)})
        for (long N = 1; N <= 3; ++N)
            for (unsigned long k = 0; k <= 3; ++k) {
                auto rep = verify_charlier_cauchy(theta, N, k, 90, digits);
                c.expect(rep.converged && rep.last_shell < pow10(-12, digits) *
                                                               (Real(1L, digits) + rep.lhs.abs()),
                         "charlier tail");
                c.expect(rep.gap < pow10(-10, digits), "charlier cauchy gap");
            }
    for (const auto& q : {rq(1, 4), rq(1, 2)})
        for (long N = 1; N <= 3; ++N)
            for (unsigned long k = 0; k <= 3; ++k) {
                auto rep = verify_meixner_cauchy(q, N, k, 150, digits);
                c.expect(rep.converged, "meixner tail");
                bool lower_one_ok = rep.matches == "lower_one" || rep.matches == "both";
                c.expect(lower_one_ok, "meixner cauchy match");
                if (N == 2 && k == 1)
                    adjudication << "q=" << to_string(q) << " N=2 k=1 matches=" << rep.matches
                                 << " (printed lower parameter 2 gap " << rep.gap_printed.str(3)
                                 << ", lower parameter 1 gap " << rep.gap_lower_one.str(3)
                                 << "); ";
            }
    for (const auto& t : {rq(1, 2), rq(1)})
        for (unsigned long k = 0; k <= 2; ++k) {
            auto rep = verify_poissonised_cauchy(rq(1, 2), t, k, 40, 80, digits);
            c.expect(rep.gap < pow10(-8, digits), "poissonised gap");
        }
    for (const auto& t : {rq(1, 2), rq(1)})
        for (unsigned long k = 0; k <= 2; ++k) {
            auto rep = verify_nb_cauchy(rq(1, 8), t, k, 25, 120, digits);
            c.expect(rep.gap < pow10(-8, digits), "negative binomialised gap");
        }
    for (long N = 1; N <= 3; ++N) {
        c.expect(abs_diff(charlier_schur_mass(rq(1, 2), N, 70, digits), Real(1L, digits)) <
                     pow10(-8, digits),
                 "charlier mass");
        for (long gamma : {1L, 2L})
            c.expect(abs_diff(meixner_schur_mass(rq(1, 2), gamma, N, 130, digits),
                              Real(1L, digits)) < pow10(-8, digits),
                     "meixner mass");
    }
    return {9, "partition route: cauchy-type sums converge to the closed forms", c.ok, false,
            c.details("lower-parameter adjudication: " + adjudication.str())};
}

}  // namespace

std::vector<CriterionResult> run_verification_battery(int digits) {
    std::vector<CriterionResult> out;
    out.push_back(route_equality(digits));
    out.push_back(krawtchouk_routes(digits));
    out.push_back(listed_polynomials(digits));
    out.push_back(catalan_specialisations(digits));
    out.push_back(identity_suites(digits));
    out.push_back(printed_equation_report(digits));
    out.push_back(randomisation_oracles(digits));
    out.push_back(equilibrium_checks(digits));
    out.push_back(schur_route(digits));
    return out;
}

bool battery_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.informational && !r.passed) return false;
    return true;
}

}  // namespace ope
