#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cascade/coefficients.hpp"
#include "cascade/propagator.hpp"

namespace cascade {

/// Terminal velocity increments of the diffusion dual to the density
/// evolution: d(ln v) = -(a + c) d lambda + sqrt(2 c) dW.
/// Reproducible from (seed, scheme, parameters) under any thread count.
struct PathEnsemble {
    double lambda = 0.0;
    std::vector<double> samples;  ///< terminal v, one per path, all > 0
    std::uint64_t seed = 0;
    std::string scheme;           ///< "exact_gaussian" or "euler_maruyama"
    std::size_t n_steps = 0;      ///< euler_maruyama only
};

/// One Gaussian draw per path from the closed-form terminal law:
/// ln v ~ Normal(ln v0 + 2 gamma - beta1, 2 gamma).
PathEnsemble sample_exact(const CoefficientProfile& profile, double v0,
                          double lambda, std::size_t n, std::uint64_t seed,
                          unsigned n_threads = 1);

/// Euler-Maruyama in log coordinates (positivity is structural),
/// coefficients frozen at the left endpoint of each step. Exact in
/// distribution for constant coefficients; first-order weak otherwise.
PathEnsemble sample_em(const CoefficientProfile& profile, double v0,
                       double lambda, std::size_t n, std::size_t n_steps,
                       std::uint64_t seed, unsigned n_threads = 1);

/// Sup-norm distance between the empirical CDF of the ensemble and the
/// supplied exact CDF of v. The evaluator must be monotone on the sample
/// range.
double ks_distance(const PathEnsemble& ensemble,
                   const std::function<double(double)>& cdf);

/// Critical KS value at significance alpha for sample size n, from the
/// asymptotic Kolmogorov distribution (1.9495/sqrt(n) at alpha = 0.001).
double ks_critical(double alpha, std::size_t n);

/// CDF of v built from a density field by cumulative trapezoid in y,
/// normalized to the field's total mass; piecewise linear between nodes.
std::function<double(double)> field_cdf(const DensityField& field);

/// Empirical n-th moment of v and its standard error.
double ensemble_moment(const PathEnsemble& ensemble, int n);
double ensemble_moment_stderr(const PathEnsemble& ensemble, int n);

} // namespace cascade
