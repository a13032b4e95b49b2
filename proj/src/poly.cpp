#include "ope/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ope {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    if (c == 0) return Poly();
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly operator*(const Rational& c, Poly p) {
    if (c == 0) return Poly();
    for (auto& a : p.coeffs_) a *= c;
    return p;
}

Poly Poly::operator-() const { return Rational(-1) * (*this); }

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(out));
}

Rational Poly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly Poly::pow(unsigned long e) const {
    Poly acc(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::div_exact(const Poly& lhs, const Poly& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero polynomial");
    if (lhs.is_zero()) return Poly();
    if (lhs.degree() < rhs.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Rational> rem = lhs.coeffs_;
    std::vector<Rational> quot(static_cast<size_t>(lhs.degree() - rhs.degree()) + 1, Rational(0));
    const Rational& lead = rhs.leading();
    for (int d = lhs.degree(); d >= rhs.degree();) {
        Rational q = rem[static_cast<size_t>(d)] / lead;
        quot[static_cast<size_t>(d - rhs.degree())] = q;
        for (int j = 0; j <= rhs.degree(); ++j)
            rem[static_cast<size_t>(d - rhs.degree() + j)] -= q * rhs.coeff(j);
        while (d >= 0 && rem[static_cast<size_t>(d)] == 0) --d;
        if (d < rhs.degree() && d >= 0) throw std::domain_error("inexact polynomial division");
    }
    return Poly(std::move(quot));
}

namespace {

using ZPoly = std::vector<Integer>;

// Strips the integer content (gcd of coefficients); sign normalised so the
// leading coefficient is positive.
void make_primitive(ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return;
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
}

ZPoly to_integer_primitive(const Poly& p) {
    Integer lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(Integer(c.get_num() * (lcm / c.get_den())));
    make_primitive(out);
    return out;
}

// Pseudo-remainder of a by b (deg a >= deg b), in place of a.
void pseudo_rem(ZPoly& a, const ZPoly& b) {
    const Integer& lead = b.back();
    while (a.size() >= b.size()) {
        Integer q = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) return;
    }
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return Rational(1) / b.leading() * b;
    if (b.is_zero()) return Rational(1) / a.leading() * a;
    ZPoly u = to_integer_primitive(a);
    ZPoly v = to_integer_primitive(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        pseudo_rem(u, v);
        make_primitive(u);
        std::swap(u, v);
    }
    std::vector<Rational> out;
    out.reserve(u.size());
    for (auto& c : u) out.emplace_back(c);
    Poly g(std::move(out));
    return Rational(1) / g.leading() * g;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        Rational mag = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1 && i > 0);
        if (!unit) os << to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace ope
