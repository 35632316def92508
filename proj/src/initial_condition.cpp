#include "cascade/initial_condition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;

/// Trapezoid of samples(y) * e^y over the uniform grid: the mass in v of a
/// field stored as a density in v on a log grid.
double grid_mass(double y_min, double y_max, const std::vector<double>& s) {
    const std::size_t n = s.size();
    const double dy = (y_max - y_min) / static_cast<double>(n - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double y = y_min + dy * static_cast<double>(i);
        const double term = s[i] * std::exp(y);
        acc += (i == 0 || i == n - 1) ? 0.5 * term : term;
    }
    return acc * dy;
}

} // namespace

InitialCondition InitialCondition::dirac(double v0) {
    if (!(v0 > 0.0) || !std::isfinite(v0))
        throw std::invalid_argument("dirac location must satisfy v0 > 0");
    InitialCondition ic;
    ic.kind_ = Kind::dirac;
    ic.v0_ = v0;
    return ic;
}

InitialCondition InitialCondition::lognormal(double mu, double sigma2) {
    if (!std::isfinite(mu) || !(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw std::invalid_argument(
            "lognormal datum needs finite mu and sigma2 > 0");
    InitialCondition ic;
    ic.kind_ = Kind::lognormal;
    ic.mu_ = mu;
    ic.sigma2_ = sigma2;
    return ic;
}

InitialCondition InitialCondition::grid(double y_min, double y_max,
                                        std::vector<double> samples,
                                        bool density) {
    if (!(y_max > y_min))
        throw std::invalid_argument("grid datum needs y_max > y_min");
    if (samples.size() < 16)
        throw std::invalid_argument("grid datum needs >= 16 samples");
    for (double s : samples)
        if (!std::isfinite(s) || s < 0.0)
            throw std::invalid_argument(
                "grid samples must be finite and nonnegative");
    if (density) {
        const double mass = grid_mass(y_min, y_max, samples);
        if (std::abs(mass - 1.0) > 1e-6)
            throw std::invalid_argument(
                "grid datum flagged as a density must have unit mass in v; "
                "trapezoid gives " + std::to_string(mass));
    }
    InitialCondition ic;
    ic.kind_ = Kind::grid;
    ic.is_density_ = density;
    ic.y_min_ = y_min;
    ic.y_max_ = y_max;
    ic.samples_ = std::move(samples);
    return ic;
}

double InitialCondition::eval_log(double y) const {
    const double u = y + shift_;
    switch (kind_) {
    case Kind::dirac:
        throw UnsupportedOperation(
            "an atom cannot be point-evaluated; it is propagated "
            "analytically");
    case Kind::lognormal: {
        const double d = u - mu_;
        // phi(e^u) = exp(-(u - mu)^2 / (2 sigma2)) / (e^u sigma sqrt(2 pi))
        return std::exp(-0.5 * d * d / sigma2_ - u) /
               (std::sqrt(sigma2_) * kSqrt2Pi);
    }
    case Kind::grid: {
        if (u < y_min_ || u > y_max_)
            return 0.0;
        const std::size_t n = samples_.size();
        const double dy = (y_max_ - y_min_) / static_cast<double>(n - 1);
        const double t = (u - y_min_) / dy;
        const std::size_t i =
            std::min(static_cast<std::size_t>(t), n - 2);
        const double w = t - static_cast<double>(i);
        return samples_[i] * (1.0 - w) + samples_[i + 1] * w;
    }
    }
    return 0.0;  // unreachable
}

InitialCondition InitialCondition::dilated(double shift) const {
    if (kind_ == Kind::dirac)
        throw UnsupportedOperation("an atom is dilated analytically, not "
                                   "through function composition");
    if (!std::isfinite(shift))
        throw std::invalid_argument("dilation shift must be finite");
    InitialCondition ic = *this;
    ic.shift_ += shift;
    ic.is_density_ = is_density_ && shift == 0.0;
    return ic;
}

double InitialCondition::dirac_location() const {
    if (kind_ != Kind::dirac)
        throw UnsupportedOperation("dirac_location on a non-dirac datum");
    return v0_;
}

double InitialCondition::lognormal_mu() const {
    if (kind_ != Kind::lognormal)
        throw UnsupportedOperation("lognormal_mu on a non-lognormal datum");
    return mu_;
}

double InitialCondition::lognormal_sigma2() const {
    if (kind_ != Kind::lognormal)
        throw UnsupportedOperation(
            "lognormal_sigma2 on a non-lognormal datum");
    return sigma2_;
}

double InitialCondition::grid_y_min() const {
    if (kind_ != Kind::grid)
        throw UnsupportedOperation("grid_y_min on a non-grid datum");
    return y_min_;
}

double InitialCondition::grid_y_max() const {
    if (kind_ != Kind::grid)
        throw UnsupportedOperation("grid_y_max on a non-grid datum");
    return y_max_;
}

const std::vector<double>& InitialCondition::grid_samples() const {
    if (kind_ != Kind::grid)
        throw UnsupportedOperation("grid_samples on a non-grid datum");
    return samples_;
}

std::pair<double, double> InitialCondition::log_support(double z) const {
    switch (kind_) {
    case Kind::dirac: {
        const double y0 = std::log(v0_);
        return {y0, y0};
    }
    case Kind::lognormal: {
        const double s = std::sqrt(sigma2_);
        return {mu_ - z * s - shift_, mu_ + z * s - shift_};
    }
    case Kind::grid:
        return {y_min_ - shift_, y_max_ - shift_};
    }
    return {0.0, 0.0};  // unreachable
}

} // namespace cascade
