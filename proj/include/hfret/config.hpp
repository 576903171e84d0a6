// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "hfret/graph.hpp"

namespace hfret {

struct PipelineConfig {
    std::size_t patch_size = 8;
    std::size_t stride = 4;
    std::size_t codebook_k = 200;
    std::size_t nmf_rank = 50;
    std::size_t nmf_max_iters = 200;
    double nmf_tol = 1e-6;
    std::size_t graph_k = 10;
    std::size_t transduce_iters = 20;
    SigmaMode sigma_mode = SigmaMode::automatic();
    std::size_t folds = 10;
    std::uint64_t seed = 0;

    bool operator==(const PipelineConfig&) const = default;
};

// Flat key=value text, one pair per line, '#' comments; unknown keys are
// errors. sigma_mode accepts "auto" or "fixed:<value>".
PipelineConfig parse_config_text(const std::string& text);
PipelineConfig load_config_file(const std::filesystem::path& path);

// Throws ConfigError when any invariant is violated (counts positive,
// nmf_rank <= codebook_k, folds >= 2, ...).
void validate(const PipelineConfig& config);

// Canonical serialization; parse_config_text(to_text(c)) == c.
std::string to_text(const PipelineConfig& config);

} // namespace hfret
