#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace lvf {

/**
 * Deterministic xoshiro256++ generator. Seeding goes through
 * splitmix64 so that nearby seeds give unrelated streams, and
 * substreams can be derived from (seed, tag) pairs so parallel
 * generation is order-independent.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + salt * 0xbf58476d1ce4e5b9ULL);
        return splitmix64(x);
    }

    static std::uint64_t mix(std::uint64_t seed, std::string_view tag) {
        // FNV-1a over the tag, folded into the seed.
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return mix(seed, h);
    }

    std::uint64_t next_u64() {
        std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace lvf
