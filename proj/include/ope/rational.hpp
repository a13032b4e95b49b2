#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ope {

/// Exact arbitrary-precision rational, always canonical (lowest terms,
/// positive denominator). GMP keeps the invariant through arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a", "a/b", or "-a/b". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& r);

/// r^e for any integer exponent; throws on 0^negative.
Rational pow(const Rational& r, long e);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True iff r is an integer <= 0 (hypergeometric termination test).
bool is_nonpositive_integer(const Rational& r);

/// For a nonpositive integer r = -n, returns n. Precondition: is_nonpositive_integer(r).
unsigned long nonpositive_integer_magnitude(const Rational& r);

Integer factorial(unsigned long n);

/// Generalised binomial: C(n,k) = n(n-1)...(n-k+1)/k! for any rational n,
/// zero for k < 0. Integer n >= 0 gives the usual values.
Rational binomial(const Rational& n, long k);

inline Rational binomial(long n, long k) { return binomial(Rational(n), k); }

}  // namespace ope
