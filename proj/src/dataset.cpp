// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/dataset.hpp"

#include <algorithm>

#include "hfret/errors.hpp"

namespace fs = std::filesystem;

namespace hfret {

namespace {

bool hidden(const std::string& name) { return !name.empty() && name.front() == '.'; }

bool has_pgm_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".pgm";
}

} // namespace

LabeledDataset scan_dataset(const fs::path& root) {
    if (!fs::is_directory(root))
        throw EmptyDataset("not a directory: " + root.string());

    LabeledDataset ds;
    std::vector<fs::path> class_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory() && !hidden(entry.path().filename().string()))
            class_dirs.push_back(entry.path());
    }
    std::sort(class_dirs.begin(), class_dirs.end());

    for (const auto& dir : class_dirs) {
        const std::string label = dir.filename().string();
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file())
                continue;
            const std::string name = entry.path().filename().string();
            if (hidden(name) || !has_pgm_extension(entry.path()))
                continue;
            files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            try {
                ImageRecord rec = load_image(file);
                rec.id = label + "/" + file.filename().string();
                rec.class_label = label;
                ds.records.push_back(std::move(rec));
            } catch (const DataError& e) {
                ds.warnings.push_back("skipped " + file.string() + ": " + e.what());
            }
        }
    }

    if (ds.records.empty())
        throw EmptyDataset("no readable images under " + root.string());

    std::sort(ds.records.begin(), ds.records.end(),
              [](const ImageRecord& a, const ImageRecord& b) { return a.id < b.id; });

    for (const auto& rec : ds.records)
        if (ds.classes.empty() || ds.classes.back() != rec.class_label)
            ds.classes.push_back(rec.class_label);
    // records are sorted by id = "<class>/<file>", so labels arrive grouped
    std::sort(ds.classes.begin(), ds.classes.end());
    ds.classes.erase(std::unique(ds.classes.begin(), ds.classes.end()), ds.classes.end());

    if (ds.classes.size() == 1)
        ds.warnings.push_back("SingleClass: retrieval evaluation needs at least 2 classes");
    return ds;
}

} // namespace hfret
