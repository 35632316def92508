#include "cascade/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

bool all_finite(const std::vector<double>& xs) {
    return std::all_of(xs.begin(), xs.end(),
                       [](double x) { return std::isfinite(x); });
}

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

/// Antiderivative of the ascending-coefficient polynomial, evaluated at x.
double horner_antiderivative(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * x + coeffs[k] / static_cast<double>(k + 1);
    return acc * x;
}

/// Real roots of the derivative of a polynomial with degree <= 3.
std::vector<double> stationary_points(const std::vector<double>& coeffs) {
    // derivative coefficients (ascending)
    std::vector<double> d;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        d.push_back(coeffs[k] * static_cast<double>(k));
    while (!d.empty() && d.back() == 0.0)
        d.pop_back();

    std::vector<double> roots;
    if (d.size() == 2) {  // linear derivative
        roots.push_back(-d[0] / d[1]);
    } else if (d.size() == 3) {  // quadratic derivative
        const double a = d[2], b = d[1], c = d[0];
        const double disc = b * b - 4.0 * a * c;
        if (disc >= 0.0) {
            const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
            roots.push_back(q / a);
            if (q != 0.0)
                roots.push_back(c / q);
        }
    }
    return roots;
}

} // namespace

ScalarCoefficient ScalarCoefficient::constant(double value) {
    if (!std::isfinite(value))
        throw std::invalid_argument("constant coefficient must be finite");
    ScalarCoefficient s;
    s.kind_ = Kind::constant;
    s.coeffs_ = {value};
    return s;
}

ScalarCoefficient ScalarCoefficient::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty())
        throw std::invalid_argument("polynomial coefficient list is empty");
    if (!all_finite(coeffs))
        throw std::invalid_argument("polynomial coefficients must be finite");
    ScalarCoefficient s;
    s.kind_ = Kind::polynomial;
    s.coeffs_ = std::move(coeffs);
    return s;
}

ScalarCoefficient ScalarCoefficient::tabulated(std::vector<double> knots,
                                               std::vector<double> values) {
    if (knots.size() < 2 || knots.size() != values.size())
        throw std::invalid_argument(
            "tabulated coefficient needs >= 2 matching (knot, value) pairs");
    if (!all_finite(knots) || !all_finite(values))
        throw std::invalid_argument("tabulated data must be finite");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i] > knots[i - 1]))
            throw std::invalid_argument(
                "tabulated knots must be strictly increasing");
    ScalarCoefficient s;
    s.kind_ = Kind::tabulated;
    s.knots_ = std::move(knots);
    s.values_ = std::move(values);
    return s;
}

double ScalarCoefficient::operator()(double lambda) const {
    switch (kind_) {
    case Kind::constant:
        return coeffs_[0];
    case Kind::polynomial:
        return horner(coeffs_, lambda);
    case Kind::tabulated: {
        if (lambda <= knots_.front())
            return values_.front();
        if (lambda >= knots_.back())
            return values_.back();
        const auto it =
            std::upper_bound(knots_.begin(), knots_.end(), lambda);
        const std::size_t i = static_cast<std::size_t>(it - knots_.begin());
        const double x0 = knots_[i - 1], x1 = knots_[i];
        const double w = (lambda - x0) / (x1 - x0);
        return values_[i - 1] * (1.0 - w) + values_[i] * w;
    }
    }
    return 0.0;  // unreachable
}

double ScalarCoefficient::integral(double lo, double hi) const {
    if (hi < lo)
        return -integral(hi, lo);
    switch (kind_) {
    case Kind::constant:
        return coeffs_[0] * (hi - lo);
    case Kind::polynomial:
        return horner_antiderivative(coeffs_, hi) -
               horner_antiderivative(coeffs_, lo);
    case Kind::tabulated: {
        // per-segment trapezoid, exact for the piecewise-linear integrand
        double acc = 0.0;
        double p = lo;
        for (std::size_t i = 1; i < knots_.size() && p < hi; ++i) {
            const double seg_hi = knots_[i];
            if (seg_hi <= p)
                continue;
            const double q = std::min(seg_hi, hi);
            acc += 0.5 * (q - p) * ((*this)(p) + (*this)(q));
            p = q;
        }
        if (p < hi)  // flat extension beyond the last knot
            acc += values_.back() * (hi - p);
        return acc;
    }
    }
    return 0.0;  // unreachable
}

CoefficientProfile::CoefficientProfile(ScalarCoefficient a,
                                       ScalarCoefficient c, double lambda_max)
    : a_(std::move(a)), c_(std::move(c)), lambda_max_(lambda_max) {
    if (!std::isfinite(lambda_max_) || lambda_max_ <= 0.0)
        throw std::invalid_argument("lambda_max must be positive and finite");

    for (const ScalarCoefficient* s : {&a_, &c_}) {
        const char* name = (s == &a_) ? "a" : "c";

        if (s->kind() == ScalarCoefficient::Kind::tabulated) {
            if (s->knots().front() > 0.0 || s->knots().back() < lambda_max_)
                throw std::invalid_argument(
                    std::string("tabulated ") + name +
                    " must cover [0, lambda_max]");
        }

        // positivity by dense sampling plus every table knot
        const int n_samples = 1000;
        auto check = [&](double x) {
            if (!((*s)(x) > 0.0))
                throw std::invalid_argument(
                    std::string("coefficient ") + name +
                    " must be strictly positive on [0, lambda_max]; "
                    "violated near lambda = " + std::to_string(x));
        };
        for (int i = 0; i <= n_samples; ++i)
            check(lambda_max_ * static_cast<double>(i) / n_samples);
        for (double k : s->knots())
            if (k >= 0.0 && k <= lambda_max_)
                check(k);
        if (s->kind() == ScalarCoefficient::Kind::polynomial &&
            s->coefficients().size() <= 4) {
            for (double r : stationary_points(s->coefficients()))
                if (r >= 0.0 && r <= lambda_max_)
                    check(r);
        }
    }
}

void CoefficientProfile::require_in_range(double lambda) const {
    if (!(lambda >= 0.0) || !(lambda <= lambda_max_))
        throw ScaleRangeError("scale " + std::to_string(lambda) +
                              " outside the declared interval [0, " +
                              std::to_string(lambda_max_) + "]");
}

double CoefficientProfile::a_at(double lambda) const {
    require_in_range(lambda);
    return a_(lambda);
}

double CoefficientProfile::c_at(double lambda) const {
    require_in_range(lambda);
    return c_(lambda);
}

double CoefficientProfile::b0_at(double lambda) const {
    require_in_range(lambda);
    return a_(lambda) + 2.0 * c_(lambda);
}

double CoefficientProfile::b1_at(double lambda) const {
    require_in_range(lambda);
    return a_(lambda) + 3.0 * c_(lambda);
}

double CoefficientProfile::drift_at(double lambda, double v) const {
    require_in_range(lambda);
    return -a_(lambda) * v;
}

double CoefficientProfile::diffusion_at(double lambda, double v) const {
    require_in_range(lambda);
    return c_(lambda) * v * v;
}

IntegratedCoefficients CoefficientProfile::integrate(double lambda) const {
    return integrate_between(0.0, lambda);
}

IntegratedCoefficients CoefficientProfile::integrate_between(double lo,
                                                             double hi) const {
    require_in_range(lo);
    require_in_range(hi);
    if (hi < lo)
        throw ScaleRangeError("integration interval is reversed");
    const double int_a = a_.integral(lo, hi);
    const double int_c = c_.integral(lo, hi);
    IntegratedCoefficients ic;
    ic.beta0 = int_a + 2.0 * int_c;
    ic.beta1 = int_a + 3.0 * int_c;
    ic.gamma = int_c;
    ic.lambda = hi;
    return ic;
}

} // namespace cascade
