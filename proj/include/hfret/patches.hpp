// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "hfret/image.hpp"
#include "hfret/matrix.hpp"

namespace hfret {

// Dense grid sampling: one descriptor per position (x, y) with
// x in {0, stride, 2*stride, ...} and x + patch_size <= width (same for
// y), scanned row-major. Each descriptor is the patch intensities scaled
// to [0,1], mean-subtracted, divided by (stddev + 1e-8); columns of the
// returned matrix, dimension patch_size^2.
Matrix extract_patches(const ImageRecord& image, std::size_t patch_size,
                       std::size_t stride);

// Grid positions per axis: floor((extent - patch) / stride) + 1.
std::size_t patch_grid_count(std::size_t extent, std::size_t patch_size,
                             std::size_t stride);

} // namespace hfret
