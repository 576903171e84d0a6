// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/crossval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "hfret/codebook.hpp"
#include "hfret/errors.hpp"
#include "hfret/graph.hpp"
#include "hfret/matrix.hpp"
#include "hfret/nmf.hpp"
#include "hfret/patches.hpp"
#include "hfret/rng.hpp"

namespace hfret {

namespace {

constexpr std::size_t kKmeansMaxIters = 100;
// seed-derivation tags
constexpr std::uint64_t kSeedKmeans = 1;
constexpr std::uint64_t kSeedNmf = 2;
constexpr std::uint64_t kSeedProject = 3;

std::string fmt_metric(double v) {
    if (std::isnan(v))
        return "nan";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double mean_ignoring_nan(const std::vector<double>& xs) {
    double sum = 0.0;
    std::size_t n = 0;
    for (double x : xs)
        if (!std::isnan(x)) {
            sum += x;
            ++n;
        }
    return n ? sum / static_cast<double>(n) : std::numeric_limits<double>::quiet_NaN();
}

double stddev_ignoring_nan(const std::vector<double>& xs, double mean) {
    double sum = 0.0;
    std::size_t n = 0;
    for (double x : xs)
        if (!std::isnan(x)) {
            sum += (x - mean) * (x - mean);
            ++n;
        }
    return n ? std::sqrt(sum / static_cast<double>(n)) : std::numeric_limits<double>::quiet_NaN();
}

struct FoldScores {
    std::vector<double> pooled_scores;
    std::vector<std::uint8_t> pooled_labels;
    std::vector<double> query_aucs; // per non-degenerate query
};

void finalize_report(EvalReport& report) {
    report.mean_auc = mean_ignoring_nan(report.per_fold_auc);
    report.std_auc = stddev_ignoring_nan(report.per_fold_auc, report.mean_auc);
    report.mean_macro_auc = mean_ignoring_nan(report.per_fold_macro_auc);
}

void absorb_fold(EvalReport& report, const FoldScores& fold, std::size_t fold_id,
                 std::vector<std::string>& warnings) {
    try {
        RocCurve curve = roc_curve(fold.pooled_scores, fold.pooled_labels);
        report.per_fold_auc.push_back(curve.auc);
        report.per_fold_roc.push_back(std::move(curve));
    } catch (const DegenerateLabels&) {
        warnings.push_back("fold " + std::to_string(fold_id) + " (" + report.method +
                           "): DegenerateLabels, pooled ROC undefined");
        report.per_fold_auc.push_back(std::numeric_limits<double>::quiet_NaN());
        report.per_fold_roc.emplace_back();
    }
    report.per_fold_macro_auc.push_back(
        fold.query_aucs.empty()
            ? std::numeric_limits<double>::quiet_NaN()
            : mean_ignoring_nan(fold.query_aucs));
}

} // namespace

CrossValResult run_cross_validation(const LabeledDataset& dataset,
                                    const PipelineConfig& config) {
    const std::size_t n = dataset.records.size();
    const FoldAssignment folds = make_folds(n, config.folds, config.seed);

    CrossValResult result;
    result.contextual.method = "contextual";
    result.baseline.method = "baseline";
    result.contextual.config = config;
    result.baseline.config = config;
    std::vector<std::string> warnings = dataset.warnings;

    for (std::size_t f = 0; f < config.folds; ++f) {
        std::vector<std::size_t> train_idx, test_idx;
        for (std::size_t i = 0; i < n; ++i)
            (folds.fold_of[i] == f ? test_idx : train_idx).push_back(i);

        std::set<std::string> train_classes;
        for (std::size_t i : train_idx)
            train_classes.insert(dataset.records[i].class_label);
        for (const auto& cls : dataset.classes)
            if (!train_classes.count(cls))
                warnings.push_back("fold " + std::to_string(f) + ": training set lost class '" +
                                   cls + "'");

        // pooled training descriptors, per-record column ranges
        std::vector<std::pair<std::size_t, std::size_t>> ranges(train_idx.size());
        std::size_t total_cols = 0, dim = 0;
        std::vector<Matrix> per_record;
        per_record.reserve(train_idx.size());
        for (std::size_t t = 0; t < train_idx.size(); ++t) {
            Matrix d = extract_patches(dataset.records[train_idx[t]], config.patch_size,
                                       config.stride);
            dim = d.rows();
            ranges[t] = {total_cols, d.cols()};
            total_cols += d.cols();
            per_record.push_back(std::move(d));
        }
        Matrix descriptors(dim, total_cols);
        for (std::size_t t = 0; t < per_record.size(); ++t)
            std::copy(per_record[t].data(), per_record[t].data() + per_record[t].size(),
                      descriptors.col(ranges[t].first));
        per_record.clear();

        KmeansResult km = train_codebook(descriptors, config.codebook_k,
                                         derive_seed(config.seed, kSeedKmeans, f),
                                         kKmeansMaxIters);

        std::vector<std::vector<double>> histograms(train_idx.size());
        for (std::size_t t = 0; t < train_idx.size(); ++t)
            histograms[t] = quantize_image(descriptors, km.codebook, ranges[t].first,
                                           ranges[t].second);
        Matrix v = stack_columns(histograms);

        NmfResult nmf = nmf_factorize(v, config.nmf_rank, config.nmf_max_iters,
                                      config.nmf_tol, derive_seed(config.seed, kSeedNmf, f));
        const Matrix& h = nmf.coefficients;
        const std::size_t db_size = train_idx.size();
        const std::size_t graph_k = std::min(config.graph_k, db_size);

        FoldScores ctx_fold, base_fold;
        Matrix nodes(config.nmf_rank, db_size + 1);
        for (std::size_t j = 0; j < db_size; ++j)
            std::copy(h.col(j), h.col(j) + h.rows(), nodes.col(j + 1));

        for (std::size_t q = 0; q < test_idx.size(); ++q) {
            const ImageRecord& query = dataset.records[test_idx[q]];
            Matrix qd = extract_patches(query, config.patch_size, config.stride);
            std::vector<double> hist = quantize_image(qd, km.codebook);
            NmfProjection proj =
                nmf_project(hist, nmf.basis, config.nmf_max_iters, config.nmf_tol,
                            derive_seed(config.seed, kSeedProject, f * n + test_idx[q]));
            std::copy(proj.coefficients.begin(), proj.coefficients.end(), nodes.col(0));

            TransitionMatrix p = build_graph(nodes, graph_k, config.sigma_mode);
            std::vector<double> ctx = transduce(p, config.transduce_iters);
            std::vector<double> base = baseline_cosine_scores(proj.coefficients, h);

            std::vector<std::uint8_t> labels(db_size);
            for (std::size_t j = 0; j < db_size; ++j)
                labels[j] = dataset.records[train_idx[j]].class_label == query.class_label;

            auto absorb_query = [&](FoldScores& fold, const std::vector<double>& scores) {
                fold.pooled_scores.insert(fold.pooled_scores.end(), scores.begin() + 1,
                                          scores.end());
                fold.pooled_labels.insert(fold.pooled_labels.end(), labels.begin(), labels.end());
                try {
                    fold.query_aucs.push_back(
                        roc_curve({scores.data() + 1, db_size}, labels).auc);
                    return true;
                } catch (const DegenerateLabels&) {
                    return false;
                }
            };
            bool ctx_ok = absorb_query(ctx_fold, ctx);
            absorb_query(base_fold, base);
            if (!ctx_ok)
                warnings.push_back("fold " + std::to_string(f) + " query '" + query.id +
                                   "': degenerate labels, skipped in macro average");
        }

        absorb_fold(result.contextual, ctx_fold, f, warnings);
        absorb_fold(result.baseline, base_fold, f, warnings);
    }

    finalize_report(result.contextual);
    finalize_report(result.baseline);
    result.contextual.warnings = warnings;
    result.baseline.warnings = warnings;
    return result;
}

std::string report_to_csv(const EvalReport& contextual, const EvalReport& baseline) {
    std::ostringstream out;
    out << "fold,method,auc,macro_auc\n";
    for (const EvalReport* report : {&contextual, &baseline})
        for (std::size_t f = 0; f < report->per_fold_auc.size(); ++f)
            out << f << "," << report->method << "," << fmt_metric(report->per_fold_auc[f])
                << "," << fmt_metric(report->per_fold_macro_auc[f]) << "\n";
    for (const EvalReport* report : {&contextual, &baseline})
        out << "mean," << report->method << "," << fmt_metric(report->mean_auc) << ","
            << fmt_metric(report->mean_macro_auc) << "\n";
    return out.str();
}

std::string roc_to_csv(const RocCurve& curve) {
    std::ostringstream out;
    out << "threshold,fpr,tpr\n";
    for (std::size_t i = 0; i < curve.fpr.size(); ++i)
        out << fmt_g(curve.thresholds[i]) << "," << fmt_g(curve.fpr[i]) << ","
            << fmt_g(curve.tpr[i]) << "\n";
    return out.str();
}

} // namespace hfret
