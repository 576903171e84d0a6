// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <filesystem>

namespace hfret {

struct SynthSpec {
    std::size_t classes = 40;
    std::size_t per_class = 50;
    std::size_t image_size = 64;
    double noise_sigma = 0.05; // fraction of the 255 intensity range
    std::uint64_t seed = 0;
};

// Writes a grating corpus under <out>/<class>/<index>.pgm. Class c uses
// orientation c*pi/classes and frequency 0.1 + 0.02*(c mod 5)
// cycles/pixel; pixels get additive Gaussian noise of stddev
// noise_sigma*255 and are clamped to [0,255]. Deterministic per seed.
// Returns the number of files written.
std::size_t generate_synthetic_corpus(const std::filesystem::path& out,
                                      const SynthSpec& spec);

} // namespace hfret
