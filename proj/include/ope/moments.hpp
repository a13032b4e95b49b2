#pragma once

#include <variant>

#include "ope/poly.hpp"
#include "ope/rational.hpp"

namespace ope {

/// Factorial moment of the Charlier ensemble as the exact double sum
/// sum_i theta^{k-i} C(k,i)^2 (1/N) sum_{l=i}^{N-1} l!/(l-i)!.
/// Formal evaluation is permitted for any nonzero theta.
Rational charlier_ledoux(const Rational& theta, unsigned long k, long N);

/// Meixner double sum with the (gamma+l)_{k-i} factor. Formal parameters
/// (gamma <= 0, q outside (0,1)) evaluate in exact arithmetic; q must avoid
/// {0,1}.
Rational meixner_ledoux(const Rational& gamma, const Rational& q, unsigned long k, long N);

/// Krawtchouk double sum with the l!(K-l)!/((l-i)!(K-l-k+i)!) factor,
/// with both factorial ratios read as falling factorials (so k > K gives 0).
Rational krawtchouk_ledoux(long K, const Rational& p, unsigned long k, long N);

/// The same moment through the formal Meixner substitution gamma = -K,
/// q = -p/(1-p); equal to krawtchouk_ledoux by the substitution identity.
Rational krawtchouk_via_meixner(long K, const Rational& p, unsigned long k, long N);

/// theta^k 3F1(-k,-k,1-N; 2; -1/theta); equals charlier_ledoux exactly.
Rational charlier_hyper(const Rational& theta, unsigned long k, long N);

/// (q/(1-q))^k (N+1)_k/(k+1) 3F2(-k,-k,1-N; 1,-N-k; 1/q); equals
/// meixner_ledoux(1, q, k, N) exactly. The -N-k lower parameter is
/// admissible because the -k upper parameter terminates the series first.
Rational meixner1_hyper(const Rational& q, unsigned long k, long N);

/// Checks sum_{l=i}^{N-1} (l+k-i)!/(l-i)! = (N-i)_{k+1}/(k+1) exactly.
bool pochsum_check(unsigned long i, unsigned long k, long N);

struct CharlierFamily {
    Rational theta;
};
struct Meixner1Family {
    Rational q;
};
using MomentFamily = std::variant<CharlierFamily, Meixner1Family>;

/// Moment normalised to be a polynomial in k of degree 2(N-1):
/// theta^{-k} M^theta(k,N) for Charlier and
/// ((1-q)/q)^k (k+1)_N/(N+1)_k M^1_q(k,N) for Meixner. The naive Meixner
/// weight (k+1)/(N+1)_k leaves a rational function of k with poles at
/// negative integers (already at N = 2 it equals 1 + k^2/(q(k+2))); the
/// extra (k+2)_{N-1} clears exactly those poles.
Rational normalised_moment_in_k(const MomentFamily& family, unsigned long k, long N);

/// Lagrange interpolation of normalised_moment_in_k through k = 0..2(N-1).
/// Throws std::logic_error unless the interpolant reproduces the normalised
/// moment at k = 2N-1..2N+6.
Poly interpolate_normalized_in_k(const MomentFamily& family, long N);

/// Lagrange interpolation of M(k, N) in the variable N-1 through
/// N-1 = 0..k; degree <= k.
Poly interpolate_in_Nminus1(const MomentFamily& family, unsigned long k);

/// Exact Lagrange interpolation through (nodes[i], values[i]).
Poly lagrange_interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

}  // namespace ope
