// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "hfret/errors.hpp"
#include "hfret/image.hpp"
#include "hfret/rng.hpp"

namespace fs = std::filesystem;

namespace hfret {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string padded(const char* prefix, std::size_t value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%03zu", prefix, value);
    return buf;
}

} // namespace

std::size_t generate_synthetic_corpus(const fs::path& out, const SynthSpec& spec) {
    if (spec.classes == 0 || spec.per_class == 0 || spec.image_size == 0)
        throw std::invalid_argument("synth: classes, per_class and image_size must be positive");
    if (spec.noise_sigma < 0.0)
        throw std::invalid_argument("synth: noise_sigma must be nonnegative");

    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec)
        throw IoError("synth: cannot create " + out.string() + ": " + ec.message());

    Rng rng(spec.seed);
    const std::size_t side = spec.image_size;
    std::vector<std::uint8_t> pixels(side * side);
    const double noise_scale = spec.noise_sigma * 255.0;

    std::size_t written = 0;
    for (std::size_t c = 0; c < spec.classes; ++c) {
        const double theta = static_cast<double>(c) * 3.14159265358979323846 /
                             static_cast<double>(spec.classes);
        const double freq = 0.1 + 0.02 * static_cast<double>(c % 5);
        const double cs = std::cos(theta);
        const double sn = std::sin(theta);

        const fs::path class_dir = out / padded("class", c);
        fs::create_directories(class_dir, ec);
        if (ec)
            throw IoError("synth: cannot create " + class_dir.string() + ": " + ec.message());

        for (std::size_t idx = 0; idx < spec.per_class; ++idx) {
            for (std::size_t y = 0; y < side; ++y) {
                for (std::size_t x = 0; x < side; ++x) {
                    const double phase = freq * (static_cast<double>(x) * cs +
                                                 static_cast<double>(y) * sn);
                    double v = 127.5 * (1.0 + std::sin(kTwoPi * phase));
                    v += noise_scale * rng.normal();
                    v = std::clamp(v, 0.0, 255.0);
                    pixels[y * side + x] = static_cast<std::uint8_t>(std::lround(v));
                }
            }
            write_pgm(class_dir / (padded("img", idx) + ".pgm"), pixels.data(), side, side);
            ++written;
        }
    }
    return written;
}

} // namespace hfret
