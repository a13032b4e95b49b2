#include "ope/hypergeometric.hpp"

#include <limits>
#include <stdexcept>

namespace ope {

Rational rising_factorial(const Rational& a, unsigned long n) {
    Rational prod(1);
    for (unsigned long i = 0; i < n; ++i) prod *= a + static_cast<long>(i);
    return prod;
}

Rational falling_factorial(const Rational& x, unsigned long k) {
    Rational prod(1);
    for (unsigned long i = 0; i < k; ++i) prod *= x - static_cast<long>(i);
    return prod;
}

unsigned long termination_index(const HypergeoSpec& spec) {
    unsigned long n = std::numeric_limits<unsigned long>::max();
    for (const auto& a : spec.upper)
        if (is_nonpositive_integer(a)) n = std::min(n, nonpositive_integer_magnitude(a));
    if (n == std::numeric_limits<unsigned long>::max())
        throw std::domain_error("hypergeometric series does not terminate");
    for (const auto& b : spec.lower)
        if (is_nonpositive_integer(b) && nonpositive_integer_magnitude(b) < n)
            throw std::domain_error("lower-parameter pole before series termination");
    return n;
}

Rational pfq_terminating(const HypergeoSpec& spec) {
    unsigned long n = termination_index(spec);
    Rational sum(1), term(1);
    for (unsigned long i = 0; i < n; ++i) {
        Rational ratio = spec.argument / Rational(static_cast<long>(i) + 1);
        for (const auto& a : spec.upper) ratio *= a + static_cast<long>(i);
        for (const auto& b : spec.lower) ratio /= b + static_cast<long>(i);
        term *= ratio;
        sum += term;
    }
    return sum;
}

TruncatedSeries pfq_truncated(const HypergeoSpec& spec, long terms, int digits) {
    if (terms < 1) throw std::invalid_argument("pfq_truncated needs at least one term");
    Rational term(1);
    Real sum(term, digits), last(term, digits);
    for (long i = 0; i + 1 < terms; ++i) {
        Rational ratio_num = spec.argument;
        for (const auto& a : spec.upper) ratio_num *= a + i;
        if (ratio_num == 0) {  // series terminated; remaining terms are zero
            last = Real(Rational(0), digits);
            break;
        }
        Rational ratio_den(i + 1);
        for (const auto& b : spec.lower) ratio_den *= b + i;
        if (ratio_den == 0) throw std::domain_error("lower-parameter pole inside summation range");
        term *= ratio_num / ratio_den;
        last = Real(term, digits);
        sum += last;
    }
    return {sum, last.abs()};
}

}  // namespace ope
