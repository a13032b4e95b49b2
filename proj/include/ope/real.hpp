#pragma once

#include <mpfr.h>

#include <string>

#include "ope/rational.hpp"

namespace ope {

/// Arbitrary-precision floating value with explicit working precision.
///
/// Rounding is to nearest throughout; binary operations carry the larger of
/// the two operand precisions. Exact closed forms in this library stay in
/// Rational; Real is reserved for quantities that are genuinely
/// transcendental (e^{-theta}, truncated infinite sums) or for tolerance
/// comparisons.
class Real {
public:
    /// Working precision used when none is given, as significant decimal digits.
    static int default_digits();
    static void set_default_digits(int digits);
    static mpfr_prec_t digits_to_bits(int digits);

    Real();
    explicit Real(long v, int digits = 0);
    explicit Real(const Rational& q, int digits = 0);
    explicit Real(const Integer& z, int digits = 0);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision_bits() const { return mpfr_get_prec(x_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator+=(const Rational& rhs);
    Real& operator-=(const Rational& rhs);
    Real& operator*=(const Rational& rhs);
    Real& operator/=(const Rational& rhs);
    Real operator-() const;

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
    friend Real operator*(Real lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Real operator+(Real lhs, const Rational& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Rational& rhs) { return lhs -= rhs; }

    int compare(const Real& rhs) const { return mpfr_cmp(x_, rhs.x_); }
    friend bool operator==(const Real& a, const Real& b) { return a.compare(b) == 0; }
    friend bool operator<(const Real& a, const Real& b) { return a.compare(b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.compare(b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.compare(b) >= 0; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_negative() const { return mpfr_sgn(x_) < 0; }

    Real abs() const;
    static Real exp(const Real& a);
    static Real log(const Real& a);
    static Real sqrt(const Real& a);
    static Real pow(const Real& base, const Real& expo);

    /// Decimal scientific form with the given number of significant digits
    /// (default: the value's own working precision).
    std::string str(int digits = 0) const;
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    static Real parse(const std::string& text, int digits = 0);

    mpfr_srcptr get() const { return x_; }
    mpfr_ptr get() { return x_; }

private:
    explicit Real(mpfr_prec_t bits_tag, bool);
    mpfr_t x_;
};

/// |a - b|, rounded at the larger operand precision.
Real abs_diff(const Real& a, const Real& b);

/// A truncated sum together with the magnitude of its final summand, the
/// tail heuristic reported by every truncating oracle in this library.
struct TailSum {
    Real value;
    Real last_summand;
};

/// Convenience tolerance: 10^e as a Real (e may be negative).
Real pow10(long e, int digits = 0);

}  // namespace ope
