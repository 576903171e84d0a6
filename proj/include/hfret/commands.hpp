// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <string>

namespace hfret {

// Exit codes shared by every command:
//   0 success, 2 config/usage error, 3 data/model error,
//   4 internal numerical error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumeric = 4;

struct TrainOptions {
    std::string data_dir;
    std::string config_path; // empty = defaults
    std::string model_out;
};

struct QueryOptions {
    std::string model_path;
    std::string image_path;
    std::size_t top_n = 10;
    bool baseline = false;
};

struct EvaluateOptions {
    std::string data_dir;
    std::string config_path; // empty = defaults
    std::string report_out;
};

struct SynthOptions {
    std::string out_dir;
    std::size_t classes = 40;
    std::size_t per_class = 50;
    double noise_sigma = 0.05;
    std::uint64_t seed = 0;
};

// Each runs one pipeline command end to end, prints a one-line
// diagnostic to stderr on failure, and returns the exit code.
int run_train(const TrainOptions& options);
int run_query(const QueryOptions& options);
int run_evaluate(const EvaluateOptions& options);
int run_synth(const SynthOptions& options);

} // namespace hfret
