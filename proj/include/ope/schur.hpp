#pragma once

#include <string>
#include <vector>

#include "ope/rational.hpp"
#include "ope/real.hpp"

namespace ope {

/// Integer partition: weakly decreasing positive parts; empty = the zero
/// partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned long> parts);

    const std::vector<unsigned long>& parts() const { return parts_; }
    unsigned long size() const;    // |lambda|
    unsigned long length() const { return parts_.size(); }
    unsigned long part(unsigned long i) const;  // 1-indexed, 0 beyond length

    bool operator==(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<unsigned long> parts_;
};

/// Every partition with |lambda| <= max_size and length <= max_parts, each
/// exactly once, graded by |lambda| and lexicographically (largest first
/// part first) within a grade.
std::vector<Partition> partitions_iter(unsigned long max_size, unsigned long max_parts);

/// Hook lengths cell by cell, row-major.
std::vector<std::vector<unsigned long>> hook_lengths(const Partition& lambda);

/// Number of standard Young tableaux, |lambda|!/prod(hooks).
Integer f_lambda(const Partition& lambda);

/// Principal specialisation s_lambda(1^N) by the hook-content product
/// prod (N + j - i)/h(i,j); zero when length(lambda) > N.
Rational schur_at_ones(const Partition& lambda, long N);

/// (1/N) sum_i falling_factorial(lambda_i + N - i, k) over i = 1..N.
Rational F_N_k(const Partition& lambda, long N, unsigned long k);

/// Particle configuration (strictly decreasing, nonnegative) to partition,
/// lambda_i = x_i + i - N with N = x.size(); inverse below.
Partition config_to_partition(const std::vector<long>& x);
std::vector<long> partition_to_config(const Partition& lambda, long N);

/// Total mass of the Charlier Schur measure e^{-N theta} theta^{|l|}/|l|!
/// s_l(1^N) f^l, truncated at |lambda| <= max_size; approaches 1.
Real charlier_schur_mass(const Rational& theta, long N, unsigned long max_size, int digits = 0);

/// Total mass of the Meixner Schur measure q^{|l|}(1-q)^{N(N+gamma-1)}
/// s_l(1^N) s_l(1^{N+gamma-1}) for positive integer gamma; approaches 1.
Real meixner_schur_mass(const Rational& q, long gamma, long N, unsigned long max_size,
                        int digits = 0);

struct CauchyReport {
    Real lhs;
    Real rhs;
    Real gap;
    Real last_shell;  // contribution of the largest |lambda| shell included
    bool converged;   // last shell below 1e-12 of the accumulated total
};

/// Truncated sum of F_{N,k} against the Charlier Schur measure versus the
/// 3F1 closed form.
CauchyReport verify_charlier_cauchy(const Rational& theta, long N, unsigned long k,
                                    unsigned long max_size, int digits = 0);

struct MeixnerCauchyReport {
    Real lhs;  // un-normalised: sum F_{N,k} q^{|lambda|} s_lambda(1^N)^2
    Rational rhs_printed;  // 3F2 with lower parameters (2, -N-k)
    Rational rhs_lower_one;  // 3F2 with lower parameters (1, -N-k): the proven form
    Real gap_printed;
    Real gap_lower_one;
    Real last_shell;
    bool converged;
    std::string matches;  // "lower_one", "printed", "both", or "neither"
};

/// Adjudicates the two candidate right-hand sides of the gamma=1 Cauchy-type
/// identity (the displayed lower parameter 2 against the proven 1).
MeixnerCauchyReport verify_meixner_cauchy(const Rational& q, long N, unsigned long k,
                                          unsigned long max_size, int digits = 0);

struct RandomisedCauchyReport {
    Real lhs;
    Real rhs;
    Real gap;
    long terms_N;  // number of particle counts included before the tail cutoff
    bool converged;
};

/// Doubly truncated Poissonised sum over (N, lambda) versus
/// theta^k 2F1(-k,-k;2;t).
RandomisedCauchyReport verify_poissonised_cauchy(const Rational& theta, const Rational& t,
                                                 unsigned long k, long max_N,
                                                 unsigned long max_size, int digits = 0);

/// Doubly truncated 2-negative-binomialised sum over (N, lambda) versus
/// q^k k!/((1-q)^k (1-tq)^{k+2}) 2F1(-k,-k;1;t). The summand carries the
/// Schur-measure normalisation (1-q)^{N^2}; without it the N-sum diverges.
RandomisedCauchyReport verify_nb_cauchy(const Rational& q, const Rational& t, unsigned long k,
                                        long max_N, unsigned long max_size, int digits = 0);

}  // namespace ope
