// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hfret {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent deterministic stream for (base, tag, index), e.g. one
// stream per cross-validation fold or per query.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag,
                                 std::uint64_t index = 0) {
    return splitmix64(splitmix64(base ^ 0xA0761D6478BD642Full * (tag + 1)) ^
                      0xE7037ED1A0B428DBull * (index + 1));
}

// mt19937_64 with hand-rolled distributions. std:: distributions are not
// pinned across standard libraries; these are, so seeded runs reproduce
// everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform_open01() { return 1.0 - uniform01(); }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Box-Muller, two draws per call, no caching.
    double normal() {
        double u = uniform_open01();
        double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace hfret
