// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hfret/image.hpp"

namespace hfret {

struct LabeledDataset {
    std::vector<ImageRecord> records;  // sorted lexicographically by id
    std::vector<std::string> classes;  // sorted distinct class labels
    std::vector<std::string> warnings; // skipped files, single-class notice
};

// Loads a class-per-subdirectory corpus: <root>/<class>/<image>.pgm.
// Hidden files, non-.pgm extensions and unreadable images are skipped
// (with a warning). Throws EmptyDataset when nothing loads.
LabeledDataset scan_dataset(const std::filesystem::path& root);

} // namespace hfret
