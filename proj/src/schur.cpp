#include "ope/schur.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ope/hypergeometric.hpp"
#include "ope/moments.hpp"
#include "ope/randomised.hpp"

namespace ope {

Partition::Partition(std::vector<unsigned long> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

unsigned long Partition::size() const {
    unsigned long total = 0;
    for (unsigned long p : parts_) total += p;
    return total;
}

unsigned long Partition::part(unsigned long i) const {
    if (i == 0 || i > parts_.size()) return 0;
    return parts_[i - 1];
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

Real operator*(const Rational& a, Real b) { return b *= a; }

// All partitions of exactly n with at most max_parts parts, visited in
// lexicographically decreasing order.
template <typename Visit>
void enumerate_shell(unsigned long n, unsigned long max_parts, std::vector<unsigned long>& prefix,
                     Visit&& visit) {
    if (n == 0) {
        visit(prefix);
        return;
    }
    if (max_parts == 0) return;
    unsigned long largest = prefix.empty() ? n : std::min<unsigned long>(n, prefix.back());
    for (unsigned long p = largest; p >= 1; --p) {
        if (n - p > (max_parts - 1) * p) continue;  // remainder cannot fit
        prefix.push_back(p);
        enumerate_shell(n - p, max_parts - 1, prefix, visit);
        prefix.pop_back();
    }
}

template <typename Visit>
void for_each_partition_of(unsigned long n, unsigned long max_parts, Visit&& visit) {
    std::vector<unsigned long> prefix;
    enumerate_shell(n, max_parts, prefix, visit);
}

struct CellData {
    std::vector<long> contents;  // j - i per cell, row-major
    Integer hook_product;
};

CellData cell_data(const std::vector<unsigned long>& parts) {
    CellData out;
    out.hook_product = 1;
    std::vector<unsigned long> conj;
    if (!parts.empty()) {
        conj.assign(parts[0], 0);
        for (unsigned long p : parts)
            for (unsigned long j = 0; j < p; ++j) ++conj[j];
    }
    for (unsigned long i = 0; i < parts.size(); ++i) {
        for (unsigned long j = 0; j < parts[i]; ++j) {
            out.hook_product *= (parts[i] - j) + (conj[j] - i) - 1;
            out.contents.push_back(static_cast<long>(j) - static_cast<long>(i));
        }
    }
    return out;
}

Rational schur_from_cells(const CellData& cd, long N) {
    Integer num(1);
    for (long c : cd.contents) {
        num *= N + c;
        if (num == 0) return Rational(0);
    }
    Rational r(num, cd.hook_product);
    r.canonicalize();
    return r;
}

Rational f_over_size_factorial(const CellData& cd) {  // f^lambda / |lambda|!
    Rational r(1, cd.hook_product);
    r.canonicalize();
    return r;
}

Rational falling_sum(const std::vector<unsigned long>& parts, long N, unsigned long k) {
    Rational sum(0);
    for (long i = 1; i <= N; ++i) {
        unsigned long li =
            (i <= static_cast<long>(parts.size())) ? parts[static_cast<size_t>(i - 1)] : 0;
        sum += falling_factorial(Rational(static_cast<long>(li) + N - i), k);
    }
    return sum / Rational(N);
}

struct ShellSum {
    Real total;
    Real last_shell;
    unsigned long shells_done = 0;
    bool converged = false;
};

// Shell-by-shell accumulation: stop once a full |lambda|-shell contributes
// less than rel_tol of the running total on two consecutive shells past
// min_shells, with max_size as a hard cap.
template <typename ShellValue>
ShellSum sum_shells(unsigned long max_size, unsigned long min_shells, const Real& rel_tol,
                    int digits, ShellValue&& shell_value) {
    ShellSum out{Real(0L, digits), Real(0L, digits)};
    int quiet = 0;
    for (unsigned long n = 0; n <= max_size; ++n) {
        Real shell = shell_value(n);
        out.total += shell;
        out.last_shell = shell;
        out.shells_done = n + 1;
        if (n >= min_shells && shell.abs() <= rel_tol * out.total.abs())
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2) {
            out.converged = true;
            break;
        }
    }
    return out;
}

// sum over |lambda| = n, length <= N of an exact per-partition weight.
template <typename Weight>
Real shell_total(unsigned long n, long N, int digits, Weight&& weight) {
    Real total(0L, digits);
    for_each_partition_of(n, static_cast<unsigned long>(N),
                          [&](const std::vector<unsigned long>& parts) {
                              total += Real(weight(parts, cell_data(parts)), digits);
                          });
    return total;
}

// Past the mode of the shell-mass profile; the stop rule must not trigger
// on the rising side.
unsigned long charlier_min_shells(const Rational& theta, long N) {
    double mean = Rational(theta * N).get_d();
    return static_cast<unsigned long>(mean) + 6;
}

unsigned long meixner_min_shells(const Rational& q, long N) {
    double mean = Rational(q / (Rational(1) - q)).get_d() * static_cast<double>(N) * N;
    return static_cast<unsigned long>(mean) + 6;
}

}  // namespace

std::vector<Partition> partitions_iter(unsigned long max_size, unsigned long max_parts) {
    std::vector<Partition> out;
    for (unsigned long n = 0; n <= max_size; ++n)
        for_each_partition_of(
            n, max_parts, [&](const std::vector<unsigned long>& parts) { out.emplace_back(parts); });
    return out;
}

std::vector<std::vector<unsigned long>> hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    std::vector<std::vector<unsigned long>> table(parts.size());
    std::vector<unsigned long> conj;
    if (!parts.empty()) {
        conj.assign(parts[0], 0);
        for (unsigned long p : parts)
            for (unsigned long j = 0; j < p; ++j) ++conj[j];
    }
    for (unsigned long i = 0; i < parts.size(); ++i)
        for (unsigned long j = 0; j < parts[i]; ++j)
            table[i].push_back((parts[i] - j) + (conj[j] - i) - 1);
    return table;
}

Integer f_lambda(const Partition& lambda) {
    CellData cd = cell_data(lambda.parts());
    Integer f = factorial(lambda.size());
    f /= cd.hook_product;
    return f;
}

Rational schur_at_ones(const Partition& lambda, long N) {
    if (N < 0) throw std::invalid_argument("need N >= 0");
    if (lambda.length() > static_cast<unsigned long>(N)) return Rational(0);
    return schur_from_cells(cell_data(lambda.parts()), N);
}

Rational F_N_k(const Partition& lambda, long N, unsigned long k) {
    if (N < 1) throw std::invalid_argument("need N >= 1");
    if (lambda.length() > static_cast<unsigned long>(N))
        throw std::invalid_argument("partition has more than N parts");
    return falling_sum(lambda.parts(), N, k);
}

Partition config_to_partition(const std::vector<long>& x) {
    long N = static_cast<long>(x.size());
    std::vector<unsigned long> parts;
    for (long i = 1; i <= N; ++i) {
        long xi = x[static_cast<size_t>(i - 1)];
        if (xi < 0) throw std::invalid_argument("coordinates must be nonnegative");
        if (i > 1 && x[static_cast<size_t>(i - 2)] <= xi)
            throw std::invalid_argument("coordinates must be strictly decreasing");
        long li = xi + i - N;
        if (li < 0) throw std::invalid_argument("coordinates below the ground configuration");
        if (li > 0) parts.push_back(static_cast<unsigned long>(li));
    }
    return Partition(parts);
}

std::vector<long> partition_to_config(const Partition& lambda, long N) {
    if (lambda.length() > static_cast<unsigned long>(N))
        throw std::invalid_argument("partition has more than N parts");
    std::vector<long> x(static_cast<size_t>(N));
    for (long i = 1; i <= N; ++i)
        x[static_cast<size_t>(i - 1)] =
            static_cast<long>(lambda.part(static_cast<unsigned long>(i))) - i + N;
    return x;
}

namespace {

Real charlier_inner(const Rational& theta, long N, unsigned long k, unsigned long max_size,
                    const Real& rel_tol, int digits, ShellSum* diag) {
    auto sum = sum_shells(max_size, charlier_min_shells(theta, N), rel_tol, digits,
                          [&](unsigned long n) {
                              return pow(theta, static_cast<long>(n)) *
                                     shell_total(n, N, digits,
                                                 [&](const std::vector<unsigned long>& parts,
                                                     const CellData& cd) {
                                                     Rational w = f_over_size_factorial(cd) *
                                                                  schur_from_cells(cd, N);
                                                     if (k > 0) w *= falling_sum(parts, N, k);
                                                     return w;
                                                 });
                          });
    if (diag) *diag = sum;
    return sum.total;
}

Real meixner_inner(const Rational& q, long N, unsigned long k, unsigned long max_size,
                   const Real& rel_tol, int digits, ShellSum* diag) {
    auto sum = sum_shells(
        max_size, meixner_min_shells(q, N), rel_tol, digits, [&](unsigned long n) {
            return pow(q, static_cast<long>(n)) *
                   shell_total(n, N, digits,
                               [&](const std::vector<unsigned long>& parts, const CellData& cd) {
                                   Rational s = schur_from_cells(cd, N);
                                   Rational w = s * s;
                                   if (k > 0) w *= falling_sum(parts, N, k);
                                   return w;
                               });
        });
    if (diag) *diag = sum;
    return sum.total;
}

}  // namespace

Real charlier_schur_mass(const Rational& theta, long N, unsigned long max_size, int digits) {
    if (theta <= 0 || N < 1) throw std::invalid_argument("need theta > 0 and N >= 1");
    Real inner = charlier_inner(theta, N, 0, max_size, pow10(-13, digits), digits, nullptr);
    return inner * Real::exp(Real(Rational(-N) * theta, digits));
}

Real meixner_schur_mass(const Rational& q, long gamma, long N, unsigned long max_size,
                        int digits) {
    if (q <= 0 || q >= 1 || gamma < 1 || N < 1)
        throw std::invalid_argument("need q in (0,1), integer gamma >= 1, N >= 1");
    long M = N + gamma - 1;
    auto sum = sum_shells(
        max_size, meixner_min_shells(q, N), pow10(-13, digits), digits, [&](unsigned long n) {
            return pow(q, static_cast<long>(n)) *
                   shell_total(n, N, digits,
                               [&](const std::vector<unsigned long>&, const CellData& cd)
                                   -> Rational {
                                   return schur_from_cells(cd, N) * schur_from_cells(cd, M);
                               });
        });
    return sum.total * Real(pow(Rational(1) - q, N * M), digits);
}

CauchyReport verify_charlier_cauchy(const Rational& theta, long N, unsigned long k,
                                    unsigned long max_size, int digits) {
    if (theta <= 0 || N < 1) throw std::invalid_argument("need theta > 0 and N >= 1");
    ShellSum diag;
    Real inner = charlier_inner(theta, N, k, max_size, pow10(-12, digits), digits, &diag);
    Real factor = Real::exp(Real(Rational(-N) * theta, digits));
    Real lhs = inner * factor;
    Real rhs(charlier_hyper(theta, k, N), digits);
    return {lhs, rhs, abs_diff(lhs, rhs), (diag.last_shell * factor).abs(), diag.converged};
}

MeixnerCauchyReport verify_meixner_cauchy(const Rational& q, long N, unsigned long k,
                                          unsigned long max_size, int digits) {
    if (q <= 0 || q >= 1 || N < 1) throw std::invalid_argument("need q in (0,1) and N >= 1");
    ShellSum diag;
    Real lhs = meixner_inner(q, N, k, max_size, pow10(-12, digits), digits, &diag);

    Rational mk(-static_cast<long>(k));
    Rational pref = pow(q, static_cast<long>(k)) * rising_factorial(Rational(N + 1), k) /
                    (pow(Rational(1) - q, static_cast<long>(N * N + static_cast<long>(k))) *
                     Rational(static_cast<long>(k) + 1));
    Rational lower_nk(-N - static_cast<long>(k));
    Rational rhs_printed = pref * pfq_terminating({{mk, mk, Rational(1 - N)},
                                                   {Rational(2), lower_nk},
                                                   Rational(1) / q});
    Rational rhs_lower_one = pref * pfq_terminating({{mk, mk, Rational(1 - N)},
                                                     {Rational(1), lower_nk},
                                                     Rational(1) / q});

    MeixnerCauchyReport report;
    report.lhs = lhs;
    report.rhs_printed = rhs_printed;
    report.rhs_lower_one = rhs_lower_one;
    report.gap_printed = abs_diff(lhs, Real(rhs_printed, digits));
    report.gap_lower_one = abs_diff(lhs, Real(rhs_lower_one, digits));
    report.last_shell = diag.last_shell.abs();
    report.converged = diag.converged;
    Real tol = pow10(-8, digits) * (Real(1L, digits) + lhs.abs());
    bool p = report.gap_printed < tol, l = report.gap_lower_one < tol;
    report.matches = p && l ? "both" : p ? "printed" : l ? "lower_one" : "neither";
    return report;
}

RandomisedCauchyReport verify_poissonised_cauchy(const Rational& theta, const Rational& t,
                                                 unsigned long k, long max_N,
                                                 unsigned long max_size, int digits) {
    if (theta <= 0 || t <= 0) throw std::invalid_argument("need theta, t > 0");
    Real total(0L, digits);
    Real e_minus_theta = Real::exp(-Real(theta, digits));
    Real n_weight = Real::exp(-Real(t * theta, digits));  // e^{-t theta}(t theta)^{N-1}/(N-1)!
    Real e_pow(1L, digits);                               // e^{-N theta}
    Real floor_tol = pow10(-14, digits);
    long used = 0;
    int quiet = 0;
    for (long N = 1; N <= max_N; ++N) {
        e_pow *= e_minus_theta;
        Real term = n_weight * e_pow *
                    charlier_inner(theta, N, k, max_size, pow10(-12, digits), digits, nullptr);
        total += term;
        used = N;
        if (!total.is_zero() && term.abs() < floor_tol * total.abs())
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 2) break;
        n_weight *= t * theta / Rational(N);
    }
    Real rhs(poissonised_charlier(theta, k).eval(t), digits);
    return {total, rhs, abs_diff(total, rhs), used, true};
}

RandomisedCauchyReport verify_nb_cauchy(const Rational& q, const Rational& t, unsigned long k,
                                        long max_N, unsigned long max_size, int digits) {
    Rational tq = t * q;
    if (q <= 0 || q >= 1 || tq <= 0 || tq >= 1)
        throw std::invalid_argument("need q in (0,1) and 0 < tq < 1");
    Real total(0L, digits);
    Real floor_tol = pow10(-13, digits);
    long used = 0;
    int quiet = 0;
    for (long N = 1; N <= max_N; ++N) {
        // a-priori scale of this N-term, used only to budget the inner shell
        // truncation; the term itself is summed from the measure
        double scale = Rational(Rational(N) * pow(tq, N - 1)).get_d() *
                       std::max(1.0, meixner1_hyper(q, k, N).get_d());
        double budget = 1e-10 / std::max(scale, 1e-30);
        int exp10 = static_cast<int>(std::floor(std::log10(budget)));
        exp10 = std::min(-2, std::max(-13, exp10));
        if (scale < 1e-10 && N > 2) {  // dropped terms total well under 1e-9
            if (++quiet >= 2) break;
            continue;
        }
        quiet = 0;
        Real rel_tol = pow10(exp10, digits);
        Real inner = meixner_inner(q, N, k, max_size, rel_tol, digits, nullptr);
        Rational outer = Rational(N) * pow(tq, N - 1) * pow(Rational(1) - q, N * N);
        // the Schur-measure normalisation (1-q)^{N^2} keeps the N-series summable
        total += outer * inner;
        used = N;
    }
    Rational mk(-static_cast<long>(k));
    Rational rhs_exact = pow(q, static_cast<long>(k)) * Rational(factorial(k)) /
                         (pow(Rational(1) - q, static_cast<long>(k)) *
                          pow(Rational(1) - tq, static_cast<long>(k) + 2)) *
                         pfq_terminating({{mk, mk}, {Rational(1)}, t});
    Real rhs(rhs_exact, digits);
    return {total, rhs, abs_diff(total, rhs), used, true};
}

}  // namespace ope
