// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/patches.hpp"

#include <cmath>
#include <stdexcept>

#include "hfret/errors.hpp"

namespace hfret {

std::size_t patch_grid_count(std::size_t extent, std::size_t patch_size,
                             std::size_t stride) {
    return (extent - patch_size) / stride + 1;
}

Matrix extract_patches(const ImageRecord& image, std::size_t patch_size,
                       std::size_t stride) {
    if (patch_size == 0 || stride == 0)
        throw std::invalid_argument("extract_patches: patch_size and stride must be positive");
    if (patch_size > image.width || patch_size > image.height)
        throw PatchTooLarge("patch " + std::to_string(patch_size) + " exceeds image " +
                            std::to_string(image.width) + "x" + std::to_string(image.height) +
                            " (" + image.id + ")");

    const std::size_t nx = patch_grid_count(image.width, patch_size, stride);
    const std::size_t ny = patch_grid_count(image.height, patch_size, stride);
    const std::size_t dim = patch_size * patch_size;

    Matrix out(dim, nx * ny);
    std::size_t col = 0;
    for (std::size_t gy = 0; gy < ny; ++gy) {
        for (std::size_t gx = 0; gx < nx; ++gx, ++col) {
            double* d = out.col(col);
            const std::size_t x0 = gx * stride;
            const std::size_t y0 = gy * stride;
            // pixel sums are exact in the integer domain, so a constant
            // patch subtracts to exact zeros
            std::size_t i = 0;
            std::uint64_t sum = 0;
            for (std::size_t py = 0; py < patch_size; ++py) {
                const std::uint8_t* row = image.pixels.data() + (y0 + py) * image.width + x0;
                for (std::size_t px = 0; px < patch_size; ++px, ++i) {
                    d[i] = static_cast<double>(row[px]);
                    sum += row[px];
                }
            }
            const double mean = static_cast<double>(sum) / static_cast<double>(dim);
            double var = 0.0;
            for (i = 0; i < dim; ++i) {
                d[i] = (d[i] - mean) / 255.0;
                var += d[i] * d[i];
            }
            const double inv = 1.0 / (std::sqrt(var / static_cast<double>(dim)) + 1e-8);
            for (i = 0; i < dim; ++i)
                d[i] *= inv;
        }
    }
    return out;
}

} // namespace hfret
