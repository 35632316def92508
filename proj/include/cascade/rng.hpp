#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

namespace cascade {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream derived from (seed, stream index).
/// Each sample owns its stream, so ensembles are bitwise reproducible
/// under any parallel schedule.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed;
        const std::uint64_t mixed_seed = splitmix64(s);
        s = stream ^ 0xd1b54a32d192ed03ULL;
        const std::uint64_t mixed_stream = splitmix64(s);
        state_ = mixed_seed ^ (mixed_stream + 0x9e3779b97f4a7c15ULL * (stream + 1));
    }

    /// Uniform draw in (0, 1); never returns 0, so log(u) is safe.
    double uniform() {
        return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    /// Standard normal via Box-Muller; the spare draw is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace cascade
