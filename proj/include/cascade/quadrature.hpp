#pragma once

#include <vector>

namespace cascade {

/// Controls the Gauss-Hermite discretization of the log-space heat kernel.
struct QuadratureConfig {
    int gh_order = 64;    ///< number of nodes; >= 8 and even
    bool refine = false;  ///< recompute at double order, report the difference

    void validate() const;
};

/// Nodes and weights for the weight function exp(-t^2) on the real line.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Computes the order-n Gauss-Hermite rule by Newton iteration on the
/// normalized Hermite recurrence. Exact for polynomials of degree 2n-1.
GaussHermiteRule gauss_hermite_rule(int order);

} // namespace cascade
