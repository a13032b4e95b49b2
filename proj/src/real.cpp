#include "ope/real.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace ope {

namespace {
std::atomic<int> g_default_digits{60};

mpfr_prec_t bits_for(int digits) {
    if (digits <= 0) digits = g_default_digits.load();
    return Real::digits_to_bits(digits);
}
}  // namespace

int Real::default_digits() { return g_default_digits.load(); }

void Real::set_default_digits(int digits) {
    if (digits < 2) throw std::invalid_argument("precision must be at least 2 digits");
    g_default_digits.store(digits);
}

mpfr_prec_t Real::digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626) + 24);
}

Real::Real() { mpfr_init2(x_, bits_for(0)); mpfr_set_ui(x_, 0, MPFR_RNDN); }

Real::Real(long v, int digits) { mpfr_init2(x_, bits_for(digits)); mpfr_set_si(x_, v, MPFR_RNDN); }

Real::Real(const Rational& q, int digits) {
    mpfr_init2(x_, bits_for(digits));
    mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& z, int digits) {
    mpfr_init2(x_, bits_for(digits));
    mpfr_set_z(x_, z.get_mpz_t(), MPFR_RNDN);
}

Real::Real(mpfr_prec_t bits, bool) { mpfr_init2(x_, bits); }

Real::Real(const Real& other) {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_swap(x_, other.x_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(x_, mpfr_get_prec(other.x_));
        mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(x_, other.x_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

namespace {
// Widens lhs in place if rhs carries more precision, so results never lose
// the larger working precision.
void match_prec(mpfr_t lhs, mpfr_srcptr rhs) {
    if (mpfr_get_prec(rhs) > mpfr_get_prec(lhs)) {
        mpfr_t tmp;
        mpfr_init2(tmp, mpfr_get_prec(rhs));
        mpfr_set(tmp, lhs, MPFR_RNDN);
        mpfr_swap(tmp, lhs);
        mpfr_clear(tmp);
    }
}
}  // namespace

Real& Real::operator+=(const Real& rhs) { match_prec(x_, rhs.x_); mpfr_add(x_, x_, rhs.x_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& rhs) { match_prec(x_, rhs.x_); mpfr_sub(x_, x_, rhs.x_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& rhs) { match_prec(x_, rhs.x_); mpfr_mul(x_, x_, rhs.x_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& rhs) {
    if (mpfr_zero_p(rhs.x_)) throw std::domain_error("division by zero Real");
    match_prec(x_, rhs.x_);
    mpfr_div(x_, x_, rhs.x_, MPFR_RNDN);
    return *this;
}

Real& Real::operator+=(const Rational& rhs) { mpfr_add_q(x_, x_, rhs.get_mpq_t(), MPFR_RNDN); return *this; }
Real& Real::operator-=(const Rational& rhs) { mpfr_sub_q(x_, x_, rhs.get_mpq_t(), MPFR_RNDN); return *this; }
Real& Real::operator*=(const Rational& rhs) { mpfr_mul_q(x_, x_, rhs.get_mpq_t(), MPFR_RNDN); return *this; }
Real& Real::operator/=(const Rational& rhs) {
    if (rhs == 0) throw std::domain_error("division by zero Rational");
    mpfr_div_q(x_, x_, rhs.get_mpq_t(), MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real out(mpfr_get_prec(x_), true);
    mpfr_neg(out.x_, x_, MPFR_RNDN);
    return out;
}

Real Real::abs() const {
    Real out(mpfr_get_prec(x_), true);
    mpfr_abs(out.x_, x_, MPFR_RNDN);
    return out;
}

Real Real::exp(const Real& a) {
    Real out(mpfr_get_prec(a.x_), true);
    mpfr_exp(out.x_, a.x_, MPFR_RNDN);
    return out;
}

Real Real::log(const Real& a) {
    Real out(mpfr_get_prec(a.x_), true);
    mpfr_log(out.x_, a.x_, MPFR_RNDN);
    return out;
}

Real Real::sqrt(const Real& a) {
    Real out(mpfr_get_prec(a.x_), true);
    mpfr_sqrt(out.x_, a.x_, MPFR_RNDN);
    return out;
}

Real Real::pow(const Real& base, const Real& expo) {
    Real out(std::max(mpfr_get_prec(base.x_), mpfr_get_prec(expo.x_)), true);
    mpfr_pow(out.x_, base.x_, expo.x_, MPFR_RNDN);
    return out;
}

std::string Real::str(int digits) const {
    if (digits <= 0)
        digits = static_cast<int>(std::floor(mpfr_get_prec(x_) / 3.3219280948873626));
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, x_);
    return std::string(buf.data());
}

Real Real::parse(const std::string& text, int digits) {
    Real out(bits_for(digits), true);
    if (mpfr_set_str(out.x_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("bad real literal: " + text);
    return out;
}

Real abs_diff(const Real& a, const Real& b) { return (a - b).abs(); }

Real pow10(long e, int digits) {
    Real out(Rational(1), digits);
    mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) {
        Real one(1, digits);
        out = one / out;
    }
    return out;
}

}  // namespace ope
