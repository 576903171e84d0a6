// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hfret/codebook.hpp"
#include "hfret/config.hpp"
#include "hfret/matrix.hpp"

namespace hfret {

// On-disk layout (all integers little-endian):
//   magic "HSKM", format_version u32 = 1, section count u32,
//   then per section: name length u16 + UTF-8 name, followed by
//     matrix sections  ("codebook" KxD, "basis" KxR, "coefficients" RxN):
//       rows u64, cols u64, rows*cols IEEE-754 doubles, row-major
//     string sections  ("ids", "config"):
//       count u64, then per string: length u32 + UTF-8 bytes
// Save/load round-trips every matrix bit-exactly.
struct ModelContainer {
    PipelineConfig config;
    Codebook codebook;   // D x K in memory; persisted as K x D
    Matrix basis;        // K x R
    Matrix coefficients; // R x N
    std::vector<std::string> ids; // N record ids, database column order
};

inline constexpr char kModelMagic[4] = {'H', 'S', 'K', 'M'};
inline constexpr std::uint32_t kModelFormatVersion = 1;

void save_model(const std::filesystem::path& path, const ModelContainer& model);
// Throws ModelLoadError on bad magic/version, unknown or missing
// sections, or inconsistent dimensions.
ModelContainer load_model(const std::filesystem::path& path);

} // namespace hfret
