#pragma once

#include <vector>

#include "ope/rational.hpp"
#include "ope/real.hpp"

namespace ope {

/// E[xi^j] E[U^m] for an arcsine variable xi on (-1,1) and an independent
/// uniform U on (0,1): (j even ? C(j,j/2)/2^j : 0) * 1/(m+1), exact.
Rational arcsine_uniform_monomial(unsigned long j, unsigned long m);

/// kth moment of U + 2 sqrt(Uh) xi + h: h^k 2F1(-k,-k;2;1/h).
Rational charlier_eq_moment(const Rational& h, unsigned long k);

/// The same moment by exact trinomial expansion and term-by-term monomial
/// integration (odd xi powers vanish; no radicals ever materialise).
Rational charlier_eq_moment_oracle(const Rational& h, unsigned long k);

/// kth moment of U(1+q+2 sqrt(q) xi)/(1-q):
/// (q/(1-q))^k/(k+1) 2F1(-k,-k;1;1/q).
Rational meixner1_eq_moment(const Rational& q, unsigned long k);
Rational meixner1_eq_moment_oracle(const Rational& q, unsigned long k);

/// kth moment of (U + 2 sqrt(qU(c+U)) xi + q(c+U))/(1-q) as the triple sum
/// over (j,l,m) scaled by ((1+q)/(1-q))^k. The bare triple sum is the
/// moment of the variable divided by (1+q)/(1-q) per unit; the (1+q)^k part
/// of the scale is what makes the c = 0 case collapse to meixner1.
Rational meixner_general_eq_moment(const Rational& q, const Rational& c, unsigned long k);
Rational meixner_general_eq_moment_oracle(const Rational& q, const Rational& c, unsigned long k);

/// kth moment of (1-p)U + 2 sqrt(p(1-p)U(kappa-U)) xi + p(kappa-U), as the
/// displayed triple sum.
Rational krawtchouk_eq_moment(const Rational& kappa, const Rational& p, unsigned long k);
Rational krawtchouk_eq_moment_oracle(const Rational& kappa, const Rational& p, unsigned long k);

/// charlier_eq_moment(h,k) == poissonised moment at t = 1/h, normalised by
/// (theta/h)^k — holds for all theta, h > 0 (theta cancels exactly).
bool charlier_correspondence(const Rational& theta, const Rational& h, unsigned long k);

/// C(k,m)C(k,k-m) = sum_j C(m,j)C(k-j,k-m-j)C(k,k-j).
bool riordan_check(unsigned long m, unsigned long k);

struct MeixnerLimitPoint {
    Rational t;
    Real weighted_sum;       // S(t), truncated at m_max
    Real gap;                // |S(t) - limit|
    Real intermediate;       // the j-sum/2F1 rearrangement over the same index set
    Real rearrangement_gap;  // |S(t) - intermediate|
};

struct MeixnerLimitReport {
    Rational limit;  // meixner1_eq_moment(q,k), reached as t -> 1/q
    std::vector<MeixnerLimitPoint> points;
    bool gaps_decreasing;
    bool diverged;  // set when some t has tq >= 1
};

/// Weighted factorial-moment sums S(t) = sum_m M^1_q(k,m+1)/(m+2)_k
/// (m+1)(tq)^m (1-tq)^2 along an increasing t-sequence approaching 1/q,
/// with the hypergeometric rearrangement of the same truncated sum
/// cross-checked at every point.
MeixnerLimitReport meixner_limit_correspondence(const Rational& q, unsigned long k,
                                                const std::vector<Rational>& t_sequence,
                                                long m_max, int digits = 0);

}  // namespace ope
