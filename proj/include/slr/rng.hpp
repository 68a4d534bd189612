#pragma once

#include <cmath>
#include <cstdint>

#include "slr/mat2.hpp"

namespace slr {

// splitmix64: deterministic across platforms, trivially splittable by stream
// index. Distributions are hand-rolled so that byte-identical reruns do not
// depend on the standard library's <random> implementation.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0,1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }
    bool coin() { return (next_u64() & 1u) != 0; }
    int sign() { return coin() ? 1 : -1; }
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0x1.0p-60) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Independent stream for cell i of a sweep; mixing the index through
    // splitmix keeps cells decorrelated and order-independent.
    static Rng cell(std::uint64_t seed, std::uint64_t i) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
        return Rng(mixer.next_u64());
    }
};

// Random SL(2,R): Iwasawa coordinates with tau ~ U[0,2pi),
// log r ~ N(0,1) clipped to |.| <= 3, x ~ N(0,1) clipped to |x| <= 5.
inline Mat2 random_sl2(Rng& rng) {
    double tau = rng.uniform(0, 2 * M_PI);
    double lr = rng.normal();
    if (lr > 3) lr = 3;
    if (lr < -3) lr = -3;
    double x = rng.normal();
    if (x > 5) x = 5;
    if (x < -5) x = -5;
    return from_iwasawa({tau, std::exp(lr), x});
}

inline Mat2 random_elliptic(Rng& rng, double theta) {
    return Mat2::rotation(theta).conj(random_sl2(rng));
}

inline Mat2 random_hyperbolic(Rng& rng, int trace_sign) {
    double lam = std::exp(rng.uniform(0.2, 1.5));
    Mat2 m = Mat2::diagonal(lam).conj(random_sl2(rng));
    return trace_sign > 0 ? m : -m;
}

} // namespace slr
