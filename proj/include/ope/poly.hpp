#pragma once

#include <string>
#include <vector>

#include "ope/rational.hpp"

namespace ope {

/// Univariate polynomial in a formal symbol t with exact Rational
/// coefficients. The zero polynomial is the empty coefficient vector and has
/// degree -1; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();
    static Poly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^i (zero beyond the degree).
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const Rational& c, Poly p);
    Poly operator-() const;
    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

    Poly derivative() const;
    Rational eval(const Rational& t) const;
    Poly pow(unsigned long e) const;

    /// Exact division; throws std::domain_error if rhs does not divide lhs.
    static Poly div_exact(const Poly& lhs, const Poly& rhs);

    /// Monic gcd, computed with a primitive pseudo-remainder sequence over
    /// the integers to keep coefficient growth in check.
    static Poly gcd(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace ope
