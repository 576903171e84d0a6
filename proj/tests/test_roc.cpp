// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hfret/errors.hpp"
#include "hfret/roc.hpp"
#include "hfret/rng.hpp"

using namespace hfret;

namespace {

// Mann-Whitney pair counting: (#(pos>neg) + 0.5 * #(pos=neg)) / (P*N).
double pair_count_auc(const std::vector<double>& scores,
                      const std::vector<std::uint8_t>& labels) {
    double wins = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (!labels[i])
            continue;
        for (std::size_t j = 0; j < scores.size(); ++j) {
            if (labels[j])
                continue;
            ++pairs;
            if (scores[i] > scores[j])
                wins += 1.0;
            else if (scores[i] == scores[j])
                wins += 0.5;
        }
    }
    return wins / static_cast<double>(pairs);
}

} // namespace

TEST_CASE("perfect separation yields AUC 1") {
    std::vector<double> scores = {0.9, 0.8, 0.3};
    std::vector<std::uint8_t> labels = {1, 1, 0};
    RocCurve c = roc_curve(scores, labels);
    CHECK(c.auc == doctest::Approx(1.0));
    CHECK(c.fpr.front() == 0.0);
    CHECK(c.tpr.front() == 0.0);
    CHECK(c.fpr.back() == 1.0);
    CHECK(c.tpr.back() == 1.0);
}

TEST_CASE("all-tied scores yield AUC 0.5") {
    std::vector<double> scores(10, 0.42);
    std::vector<std::uint8_t> labels = {1, 0, 1, 0, 1, 0, 1, 0, 1, 0};
    CHECK(roc_curve(scores, labels).auc == doctest::Approx(0.5));
}

TEST_CASE("degenerate label sets are rejected") {
    std::vector<double> scores = {0.1, 0.2};
    CHECK_THROWS_AS(roc_curve(scores, std::vector<std::uint8_t>{1, 1}), DegenerateLabels);
    CHECK_THROWS_AS(roc_curve(scores, std::vector<std::uint8_t>{0, 0}), DegenerateLabels);
    std::vector<double> no_scores;
    std::vector<std::uint8_t> no_labels;
    CHECK_THROWS_AS(roc_curve(no_scores, no_labels), DegenerateLabels);
}

TEST_CASE("AUC equals the pair-count oracle on random instances") {
    Rng rng(91);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 2 + rng.below(60);
        std::vector<double> scores(n);
        std::vector<std::uint8_t> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] = rng.below(12) / 12.0; // frequent ties
            labels[i] = static_cast<std::uint8_t>(rng.below(2));
        }
        labels[0] = 1; // guarantee both classes
        labels[n - 1] = 0;
        RocCurve c = roc_curve(scores, labels);
        CHECK(std::abs(c.auc - pair_count_auc(scores, labels)) < 1e-9);
    }
}

TEST_CASE("curve points are monotone and thresholds strictly decrease") {
    Rng rng(97);
    std::vector<double> scores(40);
    std::vector<std::uint8_t> labels(40);
    for (std::size_t i = 0; i < 40; ++i) {
        scores[i] = rng.uniform01();
        labels[i] = static_cast<std::uint8_t>(rng.below(2));
    }
    labels[0] = 1;
    labels[1] = 0;
    RocCurve c = roc_curve(scores, labels);
    REQUIRE(c.fpr.size() == c.tpr.size());
    REQUIRE(c.fpr.size() == c.thresholds.size());
    for (std::size_t i = 1; i < c.fpr.size(); ++i) {
        CHECK(c.fpr[i] >= c.fpr[i - 1]);
        CHECK(c.tpr[i] >= c.tpr[i - 1]);
        CHECK(c.thresholds[i] < c.thresholds[i - 1]);
    }
    // trapezoid of the stored points reproduces the stored auc
    double auc = 0.0;
    for (std::size_t i = 1; i < c.fpr.size(); ++i)
        auc += (c.fpr[i] - c.fpr[i - 1]) * (c.tpr[i] + c.tpr[i - 1]) * 0.5;
    CHECK(std::abs(auc - c.auc) < 1e-9);
}

TEST_CASE("make_folds deals one record per fold when folds == n") {
    FoldAssignment fa = make_folds(10, 10, 3);
    std::vector<std::size_t> counts(10, 0);
    for (std::size_t f : fa.fold_of)
        ++counts[f];
    for (std::size_t c : counts)
        CHECK(c == 1);
}

TEST_CASE("make_folds splits 2000 records into 10 folds of 200") {
    FoldAssignment fa = make_folds(2000, 10, 0);
    std::vector<std::size_t> counts(10, 0);
    for (std::size_t f : fa.fold_of) {
        REQUIRE(f < 10);
        ++counts[f];
    }
    for (std::size_t c : counts)
        CHECK(c == 200);
}

TEST_CASE("make_folds is deterministic and balanced") {
    FoldAssignment a = make_folds(103, 10, 77);
    FoldAssignment b = make_folds(103, 10, 77);
    CHECK(a.fold_of == b.fold_of);

    std::vector<std::size_t> counts(10, 0);
    for (std::size_t f : a.fold_of)
        ++counts[f];
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    CHECK(*hi - *lo <= 1);

    FoldAssignment c = make_folds(103, 10, 78);
    CHECK(a.fold_of != c.fold_of);

    CHECK_THROWS_AS(make_folds(5, 6, 0), TooManyFolds);
}
