#include "cascade/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cascade {

void QuadratureConfig::validate() const {
    if (gh_order < 8 || gh_order % 2 != 0)
        throw std::invalid_argument("gh_order must be even and >= 8, got " +
                                    std::to_string(gh_order));
    if (gh_order > 4096)
        throw std::invalid_argument("gh_order capped at 4096, got " +
                                    std::to_string(gh_order));
}

GaussHermiteRule gauss_hermite_rule(int order) {
    if (order < 1 || order > 4096)
        throw std::invalid_argument("Gauss-Hermite order out of range: " +
                                    std::to_string(order));

    const int n = order;
    GaussHermiteRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const double pim4 = 0.75112554446494248286;  // pi^{-1/4}
    const int m = (n + 1) / 2;

    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        // initial guesses for the roots, largest first
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) -
                1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * rule.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * rule.nodes[1];
        else
            z = 2.0 * z - rule.nodes[i - 2];

        double pp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 200; ++iter) {
            // normalized Hermite recurrence; p1 ends as ~H_n(z)
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 -
                     std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z_prev = z;
            z = z_prev - p1 / pp;
            if (std::abs(z - z_prev) <= 1e-15 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error(
                "Gauss-Hermite root search failed to converge at order " +
                std::to_string(order));

        rule.nodes[i] = z;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[i] = 2.0 / (pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

} // namespace cascade
