#include "cascade/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cascade/errors.hpp"

namespace cascade {

void FdConfig::validate() const {
    if (!(y_max > y_min))
        throw std::invalid_argument("fd domain needs y_max > y_min");
    if (n_y < 64)
        throw std::invalid_argument("fd grid needs n_y >= 64");
    if (n_steps < 64)
        throw std::invalid_argument("fd run needs n_steps >= 64");
}

FdConfig auto_fd_config(const CoefficientProfile& profile,
                        const InitialCondition& ic, double lambda,
                        std::size_t n_y, std::size_t n_steps) {
    const IntegratedCoefficients integ = profile.integrate(lambda);
    // Gaussian tail below 1e-12 needs ~7.5 sigma; use 9 for headroom.
    const double z = 9.0;
    const auto [lo0, hi0] = ic.log_support(z);
    const double shift = 2.0 * integ.gamma - integ.beta1;  // mean drift of ln v
    const double spread = z * std::sqrt(2.0 * integ.gamma);
    FdConfig cfg;
    // union of the initial and terminal supports, padded by the kernel width;
    // intermediate scales stay inside because drift and width are monotone
    cfg.y_min = std::min(lo0, lo0 + shift) - spread;
    cfg.y_max = std::max(hi0, hi0 + shift) + spread;
    cfg.n_y = n_y;
    cfg.n_steps = n_steps;
    return cfg;
}

ResidualSample residual(const CoefficientProfile& profile,
                        const std::function<double(double, double)>& field,
                        double lambda, double y, double h_y, double h_lambda) {
    if (lambda - h_lambda < 0.0 || lambda + h_lambda > profile.lambda_max())
        throw ScaleRangeError(
            "residual needs lambda +- h_lambda inside [0, lambda_max]");

    const double b0 = profile.b0_at(lambda);
    const double b1 = profile.b1_at(lambda);
    const double c = profile.c_at(lambda);

    const double p_m2 = field(lambda, y - 2.0 * h_y);
    const double p_m1 = field(lambda, y - h_y);
    const double p_0 = field(lambda, y);
    const double p_p1 = field(lambda, y + h_y);
    const double p_p2 = field(lambda, y + 2.0 * h_y);

    // 4th-order central differences
    const double dp_dy =
        (-p_p2 + 8.0 * p_p1 - 8.0 * p_m1 + p_m2) / (12.0 * h_y);
    const double d2p_dy2 =
        (-p_p2 + 16.0 * p_p1 - 30.0 * p_0 + 16.0 * p_m1 - p_m2) /
        (12.0 * h_y * h_y);

    const double dp_dl = (field(lambda + h_lambda, y) -
                          field(lambda - h_lambda, y)) /
                         (2.0 * h_lambda);

    const double t_react = b0 * p_0;
    const double t_adv = b1 * dp_dy;
    const double t_diff = c * d2p_dy2;

    ResidualSample r;
    r.value = dp_dl - t_react - t_adv - t_diff;
    r.scale = std::max({std::abs(dp_dl), std::abs(t_react), std::abs(t_adv),
                        std::abs(t_diff)});
    return r;
}

DensityField fd_solve(const CoefficientProfile& profile,
                      const InitialCondition& ic, double lambda,
                      const FdConfig& cfg) {
    cfg.validate();
    if (ic.kind() == InitialCondition::Kind::dirac)
        throw UnsupportedOperation(
            "an atom is not representable on the fd grid; use a narrow "
            "lognormal stand-in with sigma2 >= 4 (grid spacing)^2");
    if (!(lambda > 0.0) || lambda > profile.lambda_max())
        throw ScaleRangeError("fd target scale must lie in (0, lambda_max]");

    const std::size_t n = cfg.n_y;
    const double dy = (cfg.y_max - cfg.y_min) / static_cast<double>(n - 1);

    if (ic.kind() == InitialCondition::Kind::lognormal &&
        ic.lognormal_sigma2() < 4.0 * dy * dy)
        throw std::invalid_argument(
            "lognormal datum too narrow for the fd grid: needs "
            "sigma2 >= 4 (grid spacing)^2");

    std::vector<double> p(n), q(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = ic.eval_log(cfg.y_min + dy * static_cast<double>(i));
    p.front() = 0.0;
    p.back() = 0.0;

    DensityField field;
    field.y_min = cfg.y_min;
    field.y_max = cfg.y_max;
    field.lambda = lambda;

    const double mass_initial = [&] {
        DensityField tmp;
        tmp.y_min = cfg.y_min;
        tmp.y_max = cfg.y_max;
        tmp.values = p;
        return tmp.mass();
    }();

    const double dl = lambda / static_cast<double>(cfg.n_steps);

    // Thomas-algorithm workspaces
    std::vector<double> cp(n), dp(n);

    for (std::size_t step = 0; step < cfg.n_steps; ++step) {
        const double mid = (static_cast<double>(step) + 0.5) * dl;
        const double b0 = profile.b0_at(mid);
        const double b1 = profile.b1_at(mid);
        const double c = profile.c_at(mid);

        const double alpha = 0.5 * dl * c / (dy * dy);
        const double beta = 0.25 * dl * b1 / dy;
        const double g0 = 0.5 * dl * b0;

        // (1 - dl/2 L) p_new = (1 + dl/2 L) p_old with
        // L p_i = b0 p_i + b1 (p_{i+1}-p_{i-1})/(2 dy)
        //        + c (p_{i+1}-2p_i+p_{i-1})/dy^2
        const double diag = 1.0 + 2.0 * alpha - g0;
        const double lower = -(alpha - beta);
        const double upper = -(alpha + beta);

        // explicit half-step into q (boundaries stay zero)
        q.front() = 0.0;
        q.back() = 0.0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            q[i] = p[i] * (1.0 - 2.0 * alpha + g0) +
                   p[i + 1] * (alpha + beta) + p[i - 1] * (alpha - beta);
        }

        // tridiagonal solve over the interior
        cp[1] = upper / diag;
        dp[1] = q[1] / diag;
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double denom = diag - lower * cp[i - 1];
            cp[i] = upper / denom;
            dp[i] = (q[i] - lower * dp[i - 1]) / denom;
        }
        p[n - 2] = dp[n - 2];
        for (std::size_t i = n - 2; i-- > 1;)
            p[i] = dp[i] - cp[i] * p[i + 1];
        p.front() = 0.0;
        p.back() = 0.0;
    }

    field.values = std::move(p);

    // audits
    double peak = 0.0;
    double most_negative = 0.0;
    for (double v : field.values) {
        peak = std::max(peak, v);
        most_negative = std::min(most_negative, v);
    }
    if (most_negative < -1e-10 * std::max(1.0, peak))
        throw NumericAuditError(
            "fd solution negative beyond the oscillation floor: min value " +
            std::to_string(most_negative));

    const double edge =
        std::max(std::abs(field.values[1]),
                 std::abs(field.values[field.values.size() - 2]));
    if (peak > 0.0 && edge > 1e-12 * peak)
        field.warnings.push_back(
            "boundary values exceed 1e-12 of the peak (" +
            std::to_string(edge / peak) +
            "); widen the domain for a trustworthy run");

    const double drift = field.mass() - mass_initial;
    if (std::abs(drift) > 1e-4)
        field.warnings.push_back("mass drifted by " + std::to_string(drift) +
                                 " over the run");

    return field;
}

} // namespace cascade
