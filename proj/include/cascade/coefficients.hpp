#pragma once

#include <vector>

namespace cascade {

/// Integrals of the reduced coefficients from the start of the interval:
/// beta0 = Int(a + 2c), beta1 = Int(a + 3c), gamma = Int(c).
/// beta0 - beta1 + gamma = 0 holds by construction.
struct IntegratedCoefficients {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;  ///< scale the integrals were taken up to
};

/// One scalar coefficient as a function of the scale variable: a constant,
/// a polynomial (ascending coefficients), or a linearly interpolated table.
class ScalarCoefficient {
public:
    enum class Kind { constant, polynomial, tabulated };

    static ScalarCoefficient constant(double value);
    static ScalarCoefficient polynomial(std::vector<double> coeffs);
    static ScalarCoefficient tabulated(std::vector<double> knots,
                                       std::vector<double> values);

    Kind kind() const { return kind_; }
    double operator()(double lambda) const;

    /// Integral over [lo, hi], exact per representation: closed form for
    /// constant/polynomial, per-segment trapezoid (exact for a piecewise
    /// linear integrand) for tabulated.
    double integral(double lo, double hi) const;

    // representation accessors, used by serialization and validation
    const std::vector<double>& coefficients() const { return coeffs_; }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& knot_values() const { return values_; }

private:
    ScalarCoefficient() = default;

    Kind kind_ = Kind::constant;
    std::vector<double> coeffs_;           // constant: single entry
    std::vector<double> knots_, values_;   // tabulated
};

/// Scale-dependent drift/diffusion pair, drift = -a(lambda) v and
/// diffusion = c(lambda) v^2, declared valid on [0, lambda_max].
/// a and c must be strictly positive on the whole interval; this is
/// checked at construction by dense sampling plus the table knots, and
/// for polynomials of degree <= 3 additionally at the endpoints and
/// stationary points.
///
/// Immutable after construction; all evaluation is pure.
class CoefficientProfile {
public:
    CoefficientProfile(ScalarCoefficient a, ScalarCoefficient c,
                       double lambda_max);

    double lambda_max() const { return lambda_max_; }

    double a_at(double lambda) const;
    double c_at(double lambda) const;
    double b0_at(double lambda) const;  ///< a + 2c
    double b1_at(double lambda) const;  ///< a + 3c

    double drift_at(double lambda, double v) const;      ///< -a(lambda) v
    double diffusion_at(double lambda, double v) const;  ///< c(lambda) v^2

    IntegratedCoefficients integrate(double lambda) const;

    /// Integrals restarted at lo: beta_j and gamma taken over [lo, hi] only.
    IntegratedCoefficients integrate_between(double lo, double hi) const;

    const ScalarCoefficient& a() const { return a_; }
    const ScalarCoefficient& c() const { return c_; }

private:
    void require_in_range(double lambda) const;

    ScalarCoefficient a_, c_;
    double lambda_max_;
};

} // namespace cascade
