// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hfret {

struct RocCurve {
    // Parallel arrays; point i is (fpr[i], tpr[i]) at score threshold
    // thresholds[i] (predict relevant when score >= threshold). The
    // leading (0,0) point carries threshold = +infinity.
    std::vector<double> thresholds;
    std::vector<double> fpr;
    std::vector<double> tpr;
    double auc = 0.0;
};

// Threshold sweep over the distinct score values descending; tied scores
// form one step, so the trapezoidal AUC equals the Mann-Whitney
// statistic with ties counted 1/2. Labels: nonzero = relevant. Throws
// DegenerateLabels when either class is absent.
RocCurve roc_curve(std::span<const double> scores, std::span<const std::uint8_t> labels);

struct FoldAssignment {
    std::vector<std::size_t> fold_of; // record index -> fold id
    std::size_t fold_count = 0;
    std::uint64_t seed = 0;
};

// Seeded pseudo-random permutation of 0..n-1 dealt round-robin, so fold
// sizes differ by at most one. Throws TooManyFolds when folds > n.
FoldAssignment make_folds(std::size_t n, std::size_t folds, std::uint64_t seed);

} // namespace hfret
