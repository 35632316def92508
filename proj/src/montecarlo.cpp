#include "cascade/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "cascade/errors.hpp"
#include "cascade/parallel.hpp"
#include "cascade/rng.hpp"

namespace cascade {

PathEnsemble sample_exact(const CoefficientProfile& profile, double v0,
                          double lambda, std::size_t n, std::uint64_t seed,
                          unsigned n_threads) {
    if (!(v0 > 0.0))
        throw std::invalid_argument("sampling needs v0 > 0");
    if (n < 1)
        throw std::invalid_argument("sampling needs n >= 1");
    const IntegratedCoefficients integ = profile.integrate(lambda);

    const double mean = std::log(v0) + 2.0 * integ.gamma - integ.beta1;
    const double sd = std::sqrt(2.0 * integ.gamma);

    PathEnsemble ens;
    ens.lambda = lambda;
    ens.seed = seed;
    ens.scheme = "exact_gaussian";
    ens.samples.assign(n, 0.0);
    parallel_for(n, n_threads, [&](std::size_t i) {
        SampleRng rng(seed, i);
        ens.samples[i] = std::exp(mean + sd * rng.normal());
    });
    return ens;
}

PathEnsemble sample_em(const CoefficientProfile& profile, double v0,
                       double lambda, std::size_t n, std::size_t n_steps,
                       std::uint64_t seed, unsigned n_threads) {
    if (!(v0 > 0.0))
        throw std::invalid_argument("sampling needs v0 > 0");
    if (n < 1)
        throw std::invalid_argument("sampling needs n >= 1");
    if (n_steps < 16)
        throw std::invalid_argument("euler_maruyama needs n_steps >= 16");
    if (!(lambda >= 0.0) || lambda > profile.lambda_max())
        throw ScaleRangeError("sampling scale outside [0, lambda_max]");

    const double dl = lambda / static_cast<double>(n_steps);
    const double y0 = std::log(v0);

    // precompute per-step drift and noise amplitude (left endpoint)
    std::vector<double> drift(n_steps), noise(n_steps);
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double lk = dl * static_cast<double>(k);
        const double a = profile.a_at(lk);
        const double c = profile.c_at(lk);
        drift[k] = -(a + c) * dl;
        noise[k] = std::sqrt(2.0 * c * dl);
    }

    PathEnsemble ens;
    ens.lambda = lambda;
    ens.seed = seed;
    ens.scheme = "euler_maruyama";
    ens.n_steps = n_steps;
    ens.samples.assign(n, 0.0);
    parallel_for(n, n_threads, [&](std::size_t i) {
        SampleRng rng(seed, i);
        double y = y0;
        for (std::size_t k = 0; k < n_steps; ++k)
            y += drift[k] + noise[k] * rng.normal();
        ens.samples[i] = std::exp(y);
    });
    return ens;
}

double ks_distance(const PathEnsemble& ensemble,
                   const std::function<double(double)>& cdf) {
    if (ensemble.samples.empty())
        throw std::invalid_argument("ks_distance needs a nonempty ensemble");

    std::vector<double> sorted(ensemble.samples);
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    double prev_f = -1.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        if (f < prev_f - 1e-12 || f < -1e-12 || f > 1.0 + 1e-12)
            throw std::invalid_argument(
                "cdf evaluator is not a monotone distribution function on "
                "the sample range");
        prev_f = f;
        const double hi = static_cast<double>(i + 1) / n;
        const double lo = static_cast<double>(i) / n;
        d = std::max({d, std::abs(f - hi), std::abs(f - lo)});
    }
    return d;
}

double ks_critical(double alpha, std::size_t n) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("significance must lie in (0, 1)");
    if (n == 0)
        throw std::invalid_argument("ks_critical needs n >= 1");
    // solve 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2) = alpha by bisection
    auto tail = [](double x) {
        double s = 0.0;
        for (int k = 1; k <= 100; ++k) {
            const double term = std::exp(-2.0 * k * k * x * x);
            s += (k % 2 == 1) ? term : -term;
            if (term < 1e-18)
                break;
        }
        return 2.0 * s;
    };
    double lo = 1e-3, hi = 4.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (tail(mid) > alpha)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi) / std::sqrt(static_cast<double>(n));
}

std::function<double(double)> field_cdf(const DensityField& field) {
    const std::size_t n = field.n_points();
    if (n < 2)
        throw std::invalid_argument("field_cdf needs a populated field");

    auto cum = std::make_shared<std::vector<double>>(n, 0.0);
    const double dy = field.dy();
    for (std::size_t i = 1; i < n; ++i) {
        const double g_prev =
            field.values[i - 1] * std::exp(field.y_at(i - 1));
        const double g_here = field.values[i] * std::exp(field.y_at(i));
        (*cum)[i] = (*cum)[i - 1] + 0.5 * dy * (g_prev + g_here);
    }
    const double total = cum->back();
    if (!(total > 0.0))
        throw std::invalid_argument("field carries no mass");
    for (double& c : *cum)
        c /= total;

    const double y_min = field.y_min;
    const double y_max = field.y_max;
    return [cum, y_min, y_max, dy](double v) {
        if (!(v > 0.0))
            return 0.0;
        const double y = std::log(v);
        if (y <= y_min)
            return 0.0;
        if (y >= y_max)
            return 1.0;
        const double t = (y - y_min) / dy;
        const std::size_t i =
            std::min(static_cast<std::size_t>(t), cum->size() - 2);
        const double w = t - static_cast<double>(i);
        return (*cum)[i] * (1.0 - w) + (*cum)[i + 1] * w;
    };
}

double ensemble_moment(const PathEnsemble& ensemble, int n) {
    if (ensemble.samples.empty())
        throw std::invalid_argument("moment of an empty ensemble");
    if (n < 0)
        throw std::invalid_argument("moment order must be >= 0");
    double acc = 0.0;
    for (double v : ensemble.samples)
        acc += std::pow(v, n);
    return acc / static_cast<double>(ensemble.samples.size());
}

double ensemble_moment_stderr(const PathEnsemble& ensemble, int n) {
    const double m = ensemble_moment(ensemble, n);
    double acc = 0.0;
    for (double v : ensemble.samples) {
        const double d = std::pow(v, n) - m;
        acc += d * d;
    }
    const double count = static_cast<double>(ensemble.samples.size());
    return std::sqrt(acc / (count - 1.0)) / std::sqrt(count);
}

} // namespace cascade
