#pragma once

#include <cstddef>
#include <functional>

#include "cascade/coefficients.hpp"
#include "cascade/initial_condition.hpp"
#include "cascade/propagator.hpp"

namespace cascade {

/// Crank-Nicolson discretization of the log-coordinate equation
/// d p / d lambda = b0 p + b1 dp/dy + c d2p/dy2 with zero-Dirichlet
/// boundaries.
struct FdConfig {
    double y_min = -8.0;
    double y_max = 8.0;
    std::size_t n_y = 2048;
    std::size_t n_steps = 2000;

    void validate() const;
};

/// Chooses a domain wide enough that the terminal solution's boundary
/// values sit below 1e-12 of its peak (Gaussian tail bound from the
/// datum's support plus the accumulated kernel width and drift).
FdConfig auto_fd_config(const CoefficientProfile& profile,
                        const InitialCondition& ic, double lambda,
                        std::size_t n_y = 2048, std::size_t n_steps = 2000);

/// One pointwise check of the log-coordinate equation on an evaluator
/// P(lambda, y): value = dP/dlambda - b0 P - b1 dP/dy - c d2P/dy2, with
/// 4th-order central differences in y and 2nd-order in lambda. scale is
/// the largest term magnitude, so |value| / scale is the relative
/// residual.
struct ResidualSample {
    double value = 0.0;
    double scale = 0.0;
};

ResidualSample residual(const CoefficientProfile& profile,
                        const std::function<double(double, double)>& field,
                        double lambda, double y, double h_y = 1e-3,
                        double h_lambda = 1e-4);

/// Crank-Nicolson run to the target scale, coefficients frozen at each
/// step's midpoint. The returned values are densities in v on the uniform
/// y grid. Boundary-mass and mass-drift violations are attached as
/// warnings; negativity beyond the oscillation floor aborts the run.
/// Dirac data are rejected: substitute a narrow lognormal with
/// sigma2 >= 4 (grid spacing)^2.
DensityField fd_solve(const CoefficientProfile& profile,
                      const InitialCondition& ic, double lambda,
                      const FdConfig& cfg);

} // namespace cascade
