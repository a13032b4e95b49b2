#include "ope/ratfunc.hpp"

#include <stdexcept>

namespace ope {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator rational function");
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    num_ = num_ * rhs.num_;
    den_ = den_ * rhs.den_;
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero rational function");
    num_ = num_ * rhs.den_;
    den_ = den_ * rhs.num_;
    return *this;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

bool RatFunc::operator==(const RatFunc& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::canonical() const {
    if (num_.is_zero()) return RatFunc(Poly(), Poly(Rational(1)));
    Poly g = Poly::gcd(num_, den_);
    Poly n = Poly::div_exact(num_, g);
    Poly d = Poly::div_exact(den_, g);
    Rational lead = d.leading();
    return RatFunc(Rational(1) / lead * n, Rational(1) / lead * d);
}

Rational RatFunc::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (d == 0) {
        RatFunc c = canonical();
        d = c.den().eval(t);
        if (d == 0) throw std::domain_error("evaluation at a pole");
        return c.num().eval(t) / d;
    }
    return num_.eval(t) / d;
}

std::string RatFunc::str(const std::string& var) const {
    RatFunc c = canonical();
    if (c.den_ == Poly(Rational(1))) return c.num_.str(var);
    return "(" + c.num_.str(var) + ") / (" + c.den_.str(var) + ")";
}

RatFunc substitute(const Poly& p, const RatFunc& x) {
    if (p.is_zero()) return RatFunc();
    int d = p.degree();
    // sum_i c_i num^i den^(d-i), all over den^d
    Poly acc;
    Poly den_pow(Rational(1));
    std::vector<Poly> num_pows(static_cast<size_t>(d) + 1);
    num_pows[0] = Poly(Rational(1));
    for (int i = 1; i <= d; ++i) num_pows[static_cast<size_t>(i)] = num_pows[static_cast<size_t>(i - 1)] * x.num();
    for (int i = d; i >= 0; --i) {
        if (p.coeff(i) != 0) acc += p.coeff(i) * (num_pows[static_cast<size_t>(i)] * den_pow);
        if (i > 0) den_pow = den_pow * x.den();
    }
    return RatFunc(acc, x.den().pow(static_cast<unsigned long>(d)));
}

}  // namespace ope
