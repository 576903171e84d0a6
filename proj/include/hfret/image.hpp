// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hfret {

struct ImageRecord {
    std::string id;           // relative path within the corpus
    std::string class_label;  // parent directory name
    std::vector<std::uint8_t> pixels; // row-major grayscale
    std::size_t width = 0;
    std::size_t height = 0;
};

// Decodes an 8-bit binary PGM (P5, maxval 255). Throws FileNotFound or
// MalformedImage. `id` defaults to the path as given; scan_dataset
// replaces it with the corpus-relative path.
ImageRecord load_image(const std::filesystem::path& path);

// Writes a P5 PGM: "P5\n<w> <h>\n255\n" followed by raw bytes.
void write_pgm(const std::filesystem::path& path, const std::uint8_t* pixels,
               std::size_t width, std::size_t height);

} // namespace hfret
