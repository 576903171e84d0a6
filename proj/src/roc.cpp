// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/roc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hfret/errors.hpp"
#include "hfret/rng.hpp"

namespace hfret {

RocCurve roc_curve(std::span<const double> scores, std::span<const std::uint8_t> labels) {
    if (scores.size() != labels.size())
        throw DimensionMismatch("roc_curve: scores and labels differ in length");
    if (scores.empty())
        throw DegenerateLabels("roc_curve: empty input");

    std::size_t positives = 0;
    for (std::uint8_t l : labels)
        positives += (l != 0);
    const std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0)
        throw DegenerateLabels("roc_curve: need at least one relevant and one irrelevant label");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    RocCurve curve;
    curve.thresholds.push_back(std::numeric_limits<double>::infinity());
    curve.fpr.push_back(0.0);
    curve.tpr.push_back(0.0);

    std::size_t tp = 0, fp = 0, i = 0;
    while (i < order.size()) {
        const double threshold = scores[order[i]];
        // one step per distinct score value
        while (i < order.size() && scores[order[i]] == threshold) {
            if (labels[order[i]] != 0)
                ++tp;
            else
                ++fp;
            ++i;
        }
        curve.thresholds.push_back(threshold);
        curve.fpr.push_back(static_cast<double>(fp) / static_cast<double>(negatives));
        curve.tpr.push_back(static_cast<double>(tp) / static_cast<double>(positives));
    }
    if (curve.fpr.back() != 1.0 || curve.tpr.back() != 1.0) {
        curve.thresholds.push_back(-std::numeric_limits<double>::infinity());
        curve.fpr.push_back(1.0);
        curve.tpr.push_back(1.0);
    }

    double auc = 0.0;
    for (std::size_t p = 1; p < curve.fpr.size(); ++p)
        auc += (curve.fpr[p] - curve.fpr[p - 1]) * (curve.tpr[p] + curve.tpr[p - 1]) * 0.5;
    curve.auc = auc;
    return curve;
}

FoldAssignment make_folds(std::size_t n, std::size_t folds, std::uint64_t seed) {
    if (n == 0 || folds == 0)
        throw std::invalid_argument("make_folds: n and folds must be positive");
    if (folds > n)
        throw TooManyFolds("make_folds: more folds than records");

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);

    FoldAssignment fa;
    fa.fold_count = folds;
    fa.seed = seed;
    fa.fold_of.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos)
        fa.fold_of[perm[pos]] = pos % folds;
    return fa;
}

} // namespace hfret
