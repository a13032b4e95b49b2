#pragma once

#include <string>
#include <vector>

#include "ope/poly.hpp"
#include "ope/ratfunc.hpp"
#include "ope/rational.hpp"
#include "ope/real.hpp"

namespace ope {

/// Jacobi polynomial P_n^{(alpha,beta)}, hypergeometric normalisation
/// (P_n(1) = (alpha+1)_n/n!, squared norm not 1).
struct JacobiSpec {
    Rational alpha;
    Rational beta;
    unsigned long n;
};

/// P_n^{(alpha,beta)}(x) evaluated exactly; formal parameters allowed.
Rational jacobi_eval(const JacobiSpec& spec, const Rational& x);

/// The same polynomial with symbolic argument, as a Poly in x.
Poly jacobi_poly(const JacobiSpec& spec);

/// Legendre P_n = P_n^{(0,0)}.
Rational legendre_eval(unsigned long n, const Rational& x);
Poly legendre_poly(unsigned long n);

Rational catalan_number(unsigned long k);

/// Poissonised Charlier factorial moment M^theta(k;t) as a polynomial in t:
/// theta^k sum_i C(k,i)^2 t^i/(i+1).
Poly poissonised_charlier(const Rational& theta, unsigned long k);

/// The same moment through the degree-k Jacobi polynomial at (1+t)/(1-t):
/// theta^k (1-t)^k/(k+1) P_k^{(1,0)}((1+t)/(1-t)). Equals
/// poissonised_charlier exactly as a rational function.
RatFunc poissonised_charlier_jacobi(const Rational& theta, unsigned long k);

/// theta^k (2k+1)/(k+1) C_k, the t = 1 specialisation of M^theta(k;t).
Rational catalan_poissonised(const Rational& theta, unsigned long k);

/// 2-negative-binomialised Meixner factorial moment M^{1,2}_q(k;t):
/// k! (q/((1-q)(1-qt)))^k 2F1(-k,-k;1;t), exact in t.
RatFunc nb_meixner(const Rational& q, unsigned long k);

/// Legendre form k! (q/((1-q)(1-tq)))^k (1-t)^k P_k((1+t)/(1-t)); equal to
/// nb_meixner as a rational function.
RatFunc nb_meixner_legendre(const Rational& q, unsigned long k);

/// q^k (1-q)^{-2k} (k+1)! C_k, the t = 1 specialisation of M^{1,2}_q(k;t).
Rational catalan_nb_meixner(const Rational& q, unsigned long k);

/// |e^{t theta} 2F1(a,b;c;t) - sum_{m<=m_max} (t theta)^m/m! 3F1(a,b,-m;c;-1/theta)|.
Real exton_defect(const Rational& a, const Rational& b, const Rational& c, const Rational& theta,
                  const Rational& t, long m_max, int digits = 0);

/// sum_m e^{-t theta} (t theta)^m/m! M^theta(k, m+1), truncated at m_max.
/// Approaches poissonised_charlier evaluated at t.
TailSum poissonisation_oracle(const Rational& theta, unsigned long k, const Rational& t,
                              long m_max, int digits = 0);

/// sum_m (m+1)(tq)^m (1-tq)^2 M^1_q(k, m+1), truncated at m_max; needs
/// 0 < tq < 1. Approaches nb_meixner evaluated at t.
TailSum nb_oracle(const Rational& q, unsigned long k, const Rational& t, long m_max,
                  int digits = 0);

/// Three-term recurrence residual for the Poissonised moments,
/// (2k+1)(k+2)^2 M_{k+1} - theta(k+1)[(2k+3)(2k+1)(1+t)+(1-t)] M_k
/// + theta^2 k^2 (2k+3)(1-t)^2 M_{k-1}; identically zero.
Poly recurrence_residual_charlier(const Rational& theta, unsigned long k);

/// M_{k+1} - (2k+1)q(1+t)/((1-q)(1-tq)) M_k + (kq(1-t)/((1-q)(1-tq)))^2 M_{k-1};
/// identically zero.
RatFunc recurrence_residual_meixner(const Rational& q, unsigned long k);

/// Residual of t(1-t)^2 P'' + (2-t)(1-t) P' - k(k+2) P with
/// P(t) = P_k^{(1,0)}((1+t)/(1-t)); identically zero.
RatFunc ode_residual_jacobi_substituted(unsigned long k);

/// Residuals of equations exactly as printed in the source being checked;
/// no corrections applied. Several fail, and the adjudication report below
/// records the exact residuals.
RatFunc printed_charlier_ode_residual(const Rational& theta, unsigned long k);
RatFunc printed_meixner_ode_residual(const Rational& q, unsigned long k);
Poly jacobi_ode_residual(unsigned long k);                 // (1-x^2)y''-(1+3x)y'+k(k+2)y
Poly printed_legendre_recurrence_residual(unsigned long k);  // middle term -2k P_k, no x
Poly printed_legendre_ode_residual(unsigned long k);         // leading coefficient (1-x)^2

/// Standard-reference counterparts used by the identity suites.
Poly legendre_recurrence_standard_residual(unsigned long k);  // (2k+1)x P_k = (k+1)P_{k+1}+k P_{k-1}
Poly legendre_ode_standard_residual(unsigned long k);         // (1-x^2)y''-2xy'+k(k+1)y
Poly jacobi10_recurrence_residual(unsigned long k);           // three-term recurrence at (1,0)

struct PrintedEquationReport {
    std::string equation;
    unsigned long k;
    bool identically_zero;
    std::string residual;  // canonical form, possibly at a sample point for context
};

/// Evaluates every printed equation at the given k values and records the
/// exact residuals; generation never fails, whatever the outcomes.
std::vector<PrintedEquationReport> adjudicate_printed_equations(
    const Rational& theta, const Rational& q, const std::vector<unsigned long>& ks);

/// Legendre rational function R_k(x) = sqrt(2)/(x+1) P_k((x-1)/(x+1)),
/// returned as the exact coefficient of sqrt(2).
struct SqrtTwoMultiple {
    Rational coefficient;
};
SqrtTwoMultiple legendre_rational(unsigned long k, const Rational& x);

/// sum_j C(k+1,k-j) C(k,j) = C(2k+1,k).
bool chu_vandermonde_check(unsigned long k);

}  // namespace ope
