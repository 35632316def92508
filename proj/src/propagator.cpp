#include "cascade/propagator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/parallel.hpp"

namespace cascade {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double kernel_sum(const std::function<double(double)>& g_log, double gamma,
                  double y, const GaussHermiteRule& rule) {
    const double step = 2.0 * std::sqrt(gamma);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * g_log(y - step * rule.nodes[i]);
    return acc / kSqrtPi;
}

} // namespace

void GridSpec::validate() const {
    if (!(y_max > y_min))
        throw std::invalid_argument("grid needs y_max > y_min");
    if (n_points < 2)
        throw std::invalid_argument("grid needs at least 2 points");
}

double DensityField::mass() const {
    const std::size_t n = values.size();
    if (n < 2)
        return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double term = values[i] * std::exp(y_at(i));
        acc += (i == 0 || i == n - 1) ? 0.5 * term : term;
    }
    return acc * dy();
}

double DensityField::max_error_estimate() const {
    double m = 0.0;
    for (double e : error_estimates)
        m = std::max(m, e);
    return m;
}

double DensityField::value_at(double y) const {
    if (values.empty() || y < y_min || y > y_max)
        return 0.0;
    const double t = (y - y_min) / dy();
    const std::size_t i =
        std::min(static_cast<std::size_t>(t), values.size() - 2);
    const double w = t - static_cast<double>(i);
    return values[i] * (1.0 - w) + values[i + 1] * w;
}

InitialCondition DensityField::as_initial_condition(bool density) const {
    return InitialCondition::grid(y_min, y_max, values, density);
}

InitialCondition dilate(const InitialCondition& ic, double beta1) {
    return ic.dilated(beta1);
}

double heat_kernel_apply(const std::function<double(double)>& g_log,
                         double gamma, double y,
                         const QuadratureConfig& quad) {
    if (!(gamma >= 0.0))
        throw std::domain_error("heat kernel needs gamma >= 0, got " +
                                std::to_string(gamma));
    quad.validate();
    if (gamma == 0.0)
        return g_log(y);
    return kernel_sum(g_log, gamma, y, gauss_hermite_rule(quad.gh_order));
}

double propagate_at(const InitialCondition& ic,
                    const IntegratedCoefficients& integrals, double y,
                    const QuadratureConfig& quad) {
    if (ic.kind() == InitialCondition::Kind::dirac)
        throw UnsupportedOperation(
            "atoms are propagated by solve_delta, not by quadrature");
    const InitialCondition shifted = ic.dilated(integrals.beta1);
    const auto g = [&shifted](double u) { return shifted.eval_log(u); };
    return std::exp(integrals.beta0) *
           heat_kernel_apply(g, integrals.gamma, y, quad);
}

double solve_at(const CoefficientProfile& profile, const InitialCondition& ic,
                double lambda, double y, const QuadratureConfig& quad) {
    if (ic.kind() == InitialCondition::Kind::dirac)
        throw UnsupportedOperation(
            "delta data have a closed form; call solve_delta");
    if (lambda == 0.0)
        return ic.eval_log(y);
    return propagate_at(ic, profile.integrate(lambda), y, quad);
}

double solve_delta_with(const IntegratedCoefficients& integrals, double v0,
                        double y) {
    if (!(v0 > 0.0))
        throw std::invalid_argument("delta datum needs v0 > 0");
    const double gamma = integrals.gamma;
    if (!(gamma > 0.0))
        throw UnsupportedOperation(
            "the delta-initialized solution is an atom at gamma = 0, "
            "not a density");
    const double d = y - std::log(v0) + integrals.beta1;
    return std::exp(integrals.beta0 - d * d / (4.0 * gamma)) /
           (v0 * std::sqrt(4.0 * std::numbers::pi * gamma));
}

double solve_delta(const CoefficientProfile& profile, double v0,
                   double lambda, double y) {
    return solve_delta_with(profile.integrate(lambda), v0, y);
}

double solve_delta_cdf(const CoefficientProfile& profile, double v0,
                       double lambda, double v) {
    if (!(v0 > 0.0))
        throw std::invalid_argument("delta datum needs v0 > 0");
    const IntegratedCoefficients ic = profile.integrate(lambda);
    if (!(ic.gamma > 0.0))
        return v >= v0 ? 1.0 : 0.0;  // still the atom
    if (!(v > 0.0))
        return 0.0;
    const double mean = std::log(v0) + 2.0 * ic.gamma - ic.beta1;
    const double z = (std::log(v) - mean) / (2.0 * std::sqrt(ic.gamma));
    return 0.5 * std::erfc(-z);
}

DensityField propagate_grid(const InitialCondition& ic,
                            const IntegratedCoefficients& integrals,
                            const GridSpec& grid, const QuadratureConfig& quad,
                            unsigned n_threads) {
    grid.validate();
    quad.validate();

    DensityField field;
    field.lambda = integrals.lambda;
    field.y_min = grid.y_min;
    field.y_max = grid.y_max;
    field.values.assign(grid.n_points, 0.0);

    const bool is_dirac = ic.kind() == InitialCondition::Kind::dirac;
    if (is_dirac) {
        const double v0 = ic.dirac_location();
        if (!(integrals.gamma > 0.0))
            throw UnsupportedOperation(
                "the delta-initialized solution is an atom at gamma = 0, "
                "not a density");
        parallel_for(grid.n_points, n_threads, [&](std::size_t i) {
            field.values[i] = solve_delta_with(integrals, v0, grid.y_at(i));
        });
        if (quad.refine)  // closed form, no quadrature error
            field.error_estimates.assign(grid.n_points, 0.0);
        return field;
    }

    if (integrals.gamma == 0.0) {
        // identity evolution (lambda = 0): the datum itself
        parallel_for(grid.n_points, n_threads, [&](std::size_t i) {
            field.values[i] = ic.eval_log(grid.y_at(i));
        });
        if (quad.refine)
            field.error_estimates.assign(grid.n_points, 0.0);
        return field;
    }

    const InitialCondition shifted = ic.dilated(integrals.beta1);
    const auto g = [&shifted](double u) { return shifted.eval_log(u); };
    const double prefactor = std::exp(integrals.beta0);
    const GaussHermiteRule rule = gauss_hermite_rule(quad.gh_order);

    if (!quad.refine) {
        parallel_for(grid.n_points, n_threads, [&](std::size_t i) {
            field.values[i] =
                prefactor * kernel_sum(g, integrals.gamma, grid.y_at(i), rule);
        });
        return field;
    }

    const GaussHermiteRule fine = gauss_hermite_rule(2 * quad.gh_order);
    field.error_estimates.assign(grid.n_points, 0.0);
    parallel_for(grid.n_points, n_threads, [&](std::size_t i) {
        const double y = grid.y_at(i);
        const double coarse_val =
            prefactor * kernel_sum(g, integrals.gamma, y, rule);
        const double fine_val =
            prefactor * kernel_sum(g, integrals.gamma, y, fine);
        field.values[i] = coarse_val;
        field.error_estimates[i] = std::abs(fine_val - coarse_val);
    });
    return field;
}

DensityField solve_grid(const CoefficientProfile& profile,
                        const InitialCondition& ic, double lambda,
                        const GridSpec& grid, const QuadratureConfig& quad,
                        unsigned n_threads) {
    return propagate_grid(ic, profile.integrate(lambda), grid, quad,
                          n_threads);
}

} // namespace cascade
