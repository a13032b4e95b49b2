#pragma once

#include <vector>

#include "ope/rational.hpp"
#include "ope/real.hpp"

namespace ope {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); 1 when n = 0.
Rational rising_factorial(const Rational& a, unsigned long n);

/// Falling factorial x(x-1)...(x-k+1); 1 when k = 0.
Rational falling_factorial(const Rational& x, unsigned long k);

/// Generalised hypergeometric series pFq(upper; lower; argument).
///
/// A spec is terminating when some upper parameter is a nonpositive integer
/// -n. A lower parameter that is a nonpositive integer -m is tolerated only
/// when the series terminates at index n <= m, i.e. before the pole is hit.
struct HypergeoSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument;
};

/// Index at which the series terminates (smallest n with -n an upper
/// parameter). Throws std::domain_error for non-terminating specs or when a
/// lower-parameter pole precedes termination.
unsigned long termination_index(const HypergeoSpec& spec);

/// Exact finite sum of a terminating series, by the term-ratio recursion.
Rational pfq_terminating(const HypergeoSpec& spec);

struct TruncatedSeries {
    Real value;
    Real last_term;  // magnitude of the final included term, a tail heuristic
};

/// Partial sum of the first `terms` terms. Throws on a lower-parameter pole
/// inside the summation range (unless the series terminated earlier).
TruncatedSeries pfq_truncated(const HypergeoSpec& spec, long terms, int digits = 0);

}  // namespace ope
