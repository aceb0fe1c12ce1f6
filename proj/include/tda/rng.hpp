#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace tda {

/// Deterministic 64-bit generator (splitmix64). Used for all seeded
/// experiments; replicate k of a run draws from stream(seed, k) so replicates
/// are independent of scheduling order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Derived stream for replicate/substream `k` of a master seed.
    static Rng stream(std::uint64_t seed, std::uint64_t k) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) { return next_u64() % n; }

    bool bernoulli(double p) { return uniform() < p; }

    double exponential() { return -std::log1p(-uniform()); }

    /// Random probability vector of length n (normalized i.i.d. exponentials,
    /// i.e. flat Dirichlet).
    std::vector<double> probability_vector(std::size_t n) {
        std::vector<double> w(n);
        double total = 0.0;
        for (auto& x : w) {
            x = exponential();
            total += x;
        }
        for (auto& x : w) x /= total;
        return w;
    }

    /// Index sample from a discrete distribution given by weights summing to 1.
    std::size_t sample(const std::vector<double>& weights) {
        double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.size() - 1;
    }

  private:
    std::uint64_t state_;
};

}  // namespace tda
