#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace camel {

// SplitMix64 finalizer. Full-avalanche 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: the stream is a keyed hash of (seed, stream,
// substream, counter), so draws for one key never depend on draws for
// another and work items can run in any order with identical output.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0) {
        key_ = mix64(mix64(mix64(seed) ^ stream) ^ substream);
    }

    std::uint64_t next_u64() { return mix64(key_ ^ ++counter_); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // Box-Muller; the sine branch is discarded so every draw costs two
    // uniforms and the stream stays position-independent.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Flat Dirichlet via normalized exponentials.
    std::vector<double> dirichlet(std::size_t k) {
        std::vector<double> out(k);
        double total = 0.0;
        for (auto& v : out) {
            double u = uniform();
            while (u >= 1.0 || u <= 0.0) u = uniform();
            v = -std::log1p(-u);
            total += v;
        }
        for (auto& v : out) v /= total;
        return out;
    }

    // Fisher-Yates prefix: first `take` positions of a shuffle of 0..n-1.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t take) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        if (take > n) take = n;
        for (std::size_t i = 0; i < take; ++i) {
            std::size_t j = i + static_cast<std::size_t>(next_u64() % (n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(take);
        return idx;
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace camel
