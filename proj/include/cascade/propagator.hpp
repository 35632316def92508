#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cascade/coefficients.hpp"
#include "cascade/initial_condition.hpp"
#include "cascade/quadrature.hpp"

namespace cascade {

/// Uniform evaluation grid in y = ln v.
struct GridSpec {
    double y_min = -8.0;
    double y_max = 8.0;
    std::size_t n_points = 1025;

    double dy() const {
        return (y_max - y_min) / static_cast<double>(n_points - 1);
    }
    double y_at(std::size_t i) const {
        return y_min + dy() * static_cast<double>(i);
    }
    void validate() const;
};

/// The density P(lambda, .) sampled on a uniform grid in y = ln v.
/// Values are densities with respect to v, not y.
struct DensityField {
    double lambda = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    std::vector<double> values;
    std::vector<double> error_estimates;  ///< per-node refine differences; empty unless requested
    std::vector<std::string> warnings;    ///< audit notes attached by producers

    std::size_t n_points() const { return values.size(); }
    double dy() const {
        return (y_max - y_min) / static_cast<double>(values.size() - 1);
    }
    double y_at(std::size_t i) const {
        return y_min + dy() * static_cast<double>(i);
    }

    /// Trapezoid of values * e^y over the grid: the mass in v.
    double mass() const;

    /// Largest per-node refine difference; 0 when refinement was off.
    double max_error_estimate() const;

    /// Linear interpolation in y, zero outside the grid.
    double value_at(double y) const;

    /// Hands the field to the propagator as a grid datum, enabling
    /// restarted (composed) evolution.
    InitialCondition as_initial_condition(bool density = false) const;
};

/// The datum precomposed with v -> v e^{beta1}. Unsupported for dirac data.
InitialCondition dilate(const InitialCondition& ic, double beta1);

/// Applies exp(gamma (v d/dv)^2) to g at the point y = ln v: the Gaussian
/// convolution of g in log space with variance 2 gamma, discretized by
/// Gauss-Hermite quadrature after s = 2 sqrt(gamma) t. gamma = 0 is the
/// identity. g takes y and returns g(e^y).
double heat_kernel_apply(const std::function<double(double)>& g_log,
                         double gamma, double y, const QuadratureConfig& quad);

/// Evolution by explicitly supplied integrals: e^{beta0} times the heat
/// kernel, applied to the datum dilated by beta1. This is the restartable
/// primitive behind solve_at; the integrals may cover any subinterval.
double propagate_at(const InitialCondition& ic,
                    const IntegratedCoefficients& integrals, double y,
                    const QuadratureConfig& quad);

/// The exact solution P(lambda, e^y) for a non-atomic datum. lambda = 0
/// returns the datum itself.
double solve_at(const CoefficientProfile& profile, const InitialCondition& ic,
                double lambda, double y, const QuadratureConfig& quad);

/// Closed form for the delta datum at v0: ln v is Gaussian with mean
/// ln v0 + 2 gamma - beta1 and variance 2 gamma, returned as a density
/// in v. Requires lambda > 0.
double solve_delta(const CoefficientProfile& profile, double v0,
                   double lambda, double y);

/// Same closed form with explicitly supplied integrals.
double solve_delta_with(const IntegratedCoefficients& integrals, double v0,
                        double y);

/// Cumulative distribution of v under the delta-datum solution.
double solve_delta_cdf(const CoefficientProfile& profile, double v0,
                       double lambda, double v);

/// Batched evaluation over a grid. Delta data take the closed form
/// node-by-node; other data go through the quadrature path. With
/// quad.refine set, per-node order-doubling differences are attached.
/// Node evaluations are independent, so the result is bitwise identical
/// for any n_threads.
DensityField solve_grid(const CoefficientProfile& profile,
                        const InitialCondition& ic, double lambda,
                        const GridSpec& grid, const QuadratureConfig& quad,
                        unsigned n_threads = 1);

/// Batched propagate_at with explicit integrals (restarted evolution).
DensityField propagate_grid(const InitialCondition& ic,
                            const IntegratedCoefficients& integrals,
                            const GridSpec& grid, const QuadratureConfig& quad,
                            unsigned n_threads = 1);

} // namespace cascade
