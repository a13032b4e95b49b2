#include "ope/rational.hpp"

#include <cctype>

namespace ope {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto ok_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string num, den = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(text);
        if (!ok_int(num)) throw std::invalid_argument("bad rational literal: " + num);
    } else {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
        if (!ok_int(num) || !ok_int(den))
            throw std::invalid_argument("bad rational literal: " + std::string(text));
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? r : Rational(r.get_den(), r.get_num());
    if (e < 0) base.canonicalize();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), n);
    out.canonicalize();
    return out;
}

bool is_nonpositive_integer(const Rational& r) { return r.get_den() == 1 && r.get_num() <= 0; }

unsigned long nonpositive_integer_magnitude(const Rational& r) {
    Integer m = -r.get_num();
    return m.get_ui();
}

Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Rational binomial(const Rational& n, long k) {
    if (k < 0) return Rational(0);
    if (is_integer(n) && n >= 0) {
        if (Rational(k) > n) return Rational(0);
        Integer b;
        mpz_bin_ui(b.get_mpz_t(), n.get_num().get_mpz_t(), static_cast<unsigned long>(k));
        return Rational(b);
    }
    Rational prod(1);
    for (long i = 0; i < k; ++i) prod *= n - i;
    return prod / Rational(factorial(static_cast<unsigned long>(k)));
}

}  // namespace ope
