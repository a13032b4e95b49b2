#pragma once

#include <string>

#include "ope/poly.hpp"

namespace ope {

/// Rational function num/den over Rational coefficients.
///
/// Arithmetic does not reduce eagerly: equality is cross-multiplied exact
/// equality and is_zero only inspects the (exact) numerator, so reduction is
/// never needed for correctness. canonical() produces the reduced form with
/// monic denominator when a unique representative is wanted.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Rational& c) : RatFunc(Poly(c)) {}

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);
    friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
    friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
    friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
    friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }
    RatFunc operator-() const;

    bool operator==(const RatFunc& rhs) const;

    /// Quotient-rule derivative (num' den - num den')/den^2.
    RatFunc derivative() const;

    /// Reduced form: gcd(num, den) = 1, monic denominator.
    RatFunc canonical() const;

    /// Exact evaluation; throws std::domain_error at a pole of the reduced form.
    Rational eval(const Rational& t) const;

    std::string str(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

/// p(x) for a rational-function argument x, by Horner on num/den powers.
RatFunc substitute(const Poly& p, const RatFunc& x);

}  // namespace ope
