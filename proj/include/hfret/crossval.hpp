// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

#include "hfret/config.hpp"
#include "hfret/dataset.hpp"
#include "hfret/roc.hpp"

namespace hfret {

struct EvalReport {
    std::string method; // "contextual" or "baseline"
    std::vector<double> per_fold_auc;       // pooled ROC per fold; NaN if degenerate
    std::vector<double> per_fold_macro_auc; // per-query AUC averaged within fold
    std::vector<RocCurve> per_fold_roc;     // empty curve when degenerate
    double mean_auc = 0.0;
    double std_auc = 0.0;
    double mean_macro_auc = 0.0;
    std::vector<std::string> warnings;
    PipelineConfig config;
};

struct CrossValResult {
    EvalReport contextual;
    EvalReport baseline;
};

// K-fold protocol: per fold, codebook and NMF are trained on the other
// folds only; each held-out image is quantized, projected onto the
// frozen basis, attached to the database graph as node 0 and scored by
// transduction (and by the cosine baseline over the same vectors).
// Relevance = same class label; (score, label) pairs pool into one ROC
// per fold and method.
CrossValResult run_cross_validation(const LabeledDataset& dataset,
                                    const PipelineConfig& config);

// CSV: header fold,method,auc,macro_auc; one row per (fold, method);
// footer rows mean,<method>,<mean_auc>,<mean_macro_auc>.
std::string report_to_csv(const EvalReport& contextual, const EvalReport& baseline);

// threshold,fpr,tpr rows for one fold's pooled curve.
std::string roc_to_csv(const RocCurve& curve);

} // namespace hfret
