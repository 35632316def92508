#pragma once

#include <utility>
#include <vector>

namespace cascade {

/// The Cauchy datum phi(v), supported on v > 0.
///
/// Three representations: a point mass at v0 (propagated analytically and
/// never point-evaluated), a log-normal density, or uniform samples of
/// phi(e^y) with linear interpolation in y and zero extension outside the
/// sampled interval. Immutable after construction.
class InitialCondition {
public:
    enum class Kind { dirac, lognormal, grid };

    static InitialCondition dirac(double v0);
    static InitialCondition lognormal(double mu, double sigma2);

    /// Uniform samples of phi(e^y) on [y_min, y_max]. With `density` set the
    /// samples must integrate to one in v (trapezoid with the e^y Jacobian,
    /// tolerance 1e-6); clear it for non-normalized test functions.
    static InitialCondition grid(double y_min, double y_max,
                                 std::vector<double> samples,
                                 bool density = true);

    Kind kind() const { return kind_; }
    bool is_density() const { return is_density_; }

    /// phi(e^{y + shift}) where shift is the accumulated dilation.
    /// Unsupported for the dirac kind.
    double eval_log(double y) const;

    /// The datum precomposed with v -> v e^{shift}: evaluation moves to
    /// y + shift in log coordinates. Unsupported for the dirac kind.
    InitialCondition dilated(double shift) const;
    double log_shift() const { return shift_; }

    double dirac_location() const;   // dirac only
    double lognormal_mu() const;     // lognormal only
    double lognormal_sigma2() const;

    double grid_y_min() const;       // grid only
    double grid_y_max() const;
    const std::vector<double>& grid_samples() const;

    /// Interval in y = ln v outside which the datum is zero (grid) or
    /// carries a tail beyond z standard deviations (lognormal). Accounts
    /// for the accumulated dilation shift. Dirac: the point {ln v0}.
    std::pair<double, double> log_support(double z) const;

private:
    InitialCondition() = default;

    Kind kind_ = Kind::dirac;
    bool is_density_ = true;
    double shift_ = 0.0;

    double v0_ = 1.0;                 // dirac
    double mu_ = 0.0, sigma2_ = 1.0;  // lognormal
    double y_min_ = 0.0, y_max_ = 0.0;
    std::vector<double> samples_;     // grid
};

} // namespace cascade
