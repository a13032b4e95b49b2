#pragma once

#include <variant>
#include <vector>

#include "ope/hypergeometric.hpp"
#include "ope/rational.hpp"
#include "ope/real.hpp"

namespace ope {

struct Charlier {
    Rational theta;  // Poisson rate, > 0 for a genuine distribution
};

struct Meixner {
    Rational gamma;  // > 0 for a genuine distribution; formal values allowed in exact arithmetic
    Rational q;      // in (0,1) for a genuine distribution
};

struct Krawtchouk {
    long K;      // number of trials; the polynomial family is finite, n = 0..K
    Rational p;  // success probability in (0,1)
};

using EnsembleParams = std::variant<Charlier, Meixner, Krawtchouk>;

/// Throws std::invalid_argument unless the parameters define a genuine
/// probability distribution. Formal (exact-arithmetic) evaluations of the
/// closed forms deliberately skip this check.
void validate_distribution(const EnsembleParams& params);

/// Reference measure mu(x) at the requested working precision.
Real reference_pmf(const EnsembleParams& params, unsigned long x, int digits = 0);

/// Exact square of the normalised orthogonal polynomial p_n(x)^2: the
/// squared square-root prefactor times the square of the terminating
/// hypergeometric factor. Accepts formal Meixner parameters.
Rational poly_squared(const EnsembleParams& params, unsigned long n, unsigned long x);

struct OnePointSpec {
    EnsembleParams params;
    long N;  // particle count, >= 1; Krawtchouk needs N <= K+1
};

void validate(const OnePointSpec& spec);

/// rho_N(x) = (1/N) sum_{n<N} p_n(x)^2 mu(x).
Real one_point_density(const OnePointSpec& spec, unsigned long x, int digits = 0);

/// Brute-force factorial moment: sum_x falling_factorial(x,k) rho_N(x) over
/// x <= x_max (Krawtchouk sums its full finite support instead).
TailSum factorial_moment_oracle(const OnePointSpec& spec, unsigned long k, long x_max,
                                int digits = 0);

struct CoulombResult {
    Real moment;         // E (1/N) sum_n falling_factorial(X_n, k)
    Real normalisation;  // Z_N over the truncated configuration space
};

/// Raw Coulomb-gas configuration sum over {0..x_max}^N with Vandermonde^2
/// weights. Cost grows as x_max^N; N <= 4 recommended.
CoulombResult coulomb_oracle(const EnsembleParams& params, long N, unsigned long k, long x_max,
                             int digits = 0);

/// Same configuration sweep evaluated for several k at once.
std::vector<CoulombResult> coulomb_oracle_multi(const EnsembleParams& params, long N,
                                                const std::vector<unsigned long>& ks, long x_max,
                                                int digits = 0);

/// |sum_x p_m(x) p_n(x) mu(x) - delta_mn|, with the signed polynomial values
/// assembled from the exact hypergeometric factors and one high-precision
/// square root.
Real orthonormality_defect(const EnsembleParams& params, unsigned long m, unsigned long n,
                           long x_max, int digits = 0);

/// Truncation default: max(200, 20 * N * mean of mu), and the exact support
/// bound K for Krawtchouk.
long default_x_max(const EnsembleParams& params, long N);

namespace detail {
/// Squared prefactor of the normalised polynomial (exact; may be negative
/// under formal parameters).
Rational norm_prefactor_squared(const EnsembleParams& params, unsigned long n);
/// The terminating hypergeometric factor of the polynomial (signed, exact).
Rational hyper_factor(const EnsembleParams& params, unsigned long n, unsigned long x);
/// mu(x) with the transcendental factor split off: pmf = rational_part * factor^scale.
Rational pmf_rational_part(const EnsembleParams& params, unsigned long x);
Real pmf_transcendental_factor(const EnsembleParams& params, int digits);
}  // namespace detail

}  // namespace ope
