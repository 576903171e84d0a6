// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "hfret/codebook.hpp"
#include "hfret/crossval.hpp"
#include "hfret/dataset.hpp"
#include "hfret/errors.hpp"
#include "hfret/graph.hpp"
#include "hfret/model_io.hpp"
#include "hfret/nmf.hpp"
#include "hfret/patches.hpp"
#include "hfret/rng.hpp"
#include "hfret/synth.hpp"

namespace fs = std::filesystem;

namespace hfret {

namespace {

constexpr std::size_t kKmeansMaxIters = 100;
constexpr std::uint64_t kSeedKmeans = 1;
constexpr std::uint64_t kSeedNmf = 2;
constexpr std::uint64_t kSeedQuery = 4;

void log_trace(const char* name, const std::vector<double>& objective) {
    std::fprintf(stderr, "# %s objective\n", name);
    for (std::size_t i = 0; i < objective.size(); ++i)
        std::fprintf(stderr, "%zu,%.17g\n", i, objective[i]);
}

PipelineConfig load_config_or_default(const std::string& path) {
    PipelineConfig cfg;
    if (!path.empty())
        cfg = load_config_file(path);
    validate(cfg);
    return cfg;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out)
        throw IoError("write failed: " + path.string());
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return kExitOk;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}

std::string fmt_score(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

int run_train(const TrainOptions& options) {
    return guarded([&] {
        const PipelineConfig cfg = load_config_or_default(options.config_path);
        LabeledDataset ds = scan_dataset(options.data_dir);
        for (const auto& w : ds.warnings)
            std::fprintf(stderr, "warning: %s\n", w.c_str());

        std::vector<std::pair<std::size_t, std::size_t>> ranges(ds.records.size());
        std::vector<Matrix> per_record;
        per_record.reserve(ds.records.size());
        std::size_t total = 0, dim = 0;
        for (std::size_t i = 0; i < ds.records.size(); ++i) {
            Matrix d = extract_patches(ds.records[i], cfg.patch_size, cfg.stride);
            dim = d.rows();
            ranges[i] = {total, d.cols()};
            total += d.cols();
            per_record.push_back(std::move(d));
        }
        Matrix descriptors(dim, total);
        for (std::size_t i = 0; i < per_record.size(); ++i)
            std::copy(per_record[i].data(), per_record[i].data() + per_record[i].size(),
                      descriptors.col(ranges[i].first));
        per_record.clear();

        KmeansResult km = train_codebook(descriptors, cfg.codebook_k,
                                         derive_seed(cfg.seed, kSeedKmeans), kKmeansMaxIters);
        log_trace("kmeans", km.objective);

        std::vector<std::vector<double>> histograms(ds.records.size());
        for (std::size_t i = 0; i < ds.records.size(); ++i)
            histograms[i] = quantize_image(descriptors, km.codebook, ranges[i].first,
                                           ranges[i].second);
        NmfResult nmf = nmf_factorize(stack_columns(histograms), cfg.nmf_rank,
                                      cfg.nmf_max_iters, cfg.nmf_tol,
                                      derive_seed(cfg.seed, kSeedNmf));
        log_trace("nmf", nmf.objective);

        ModelContainer model;
        model.config = cfg;
        model.codebook = std::move(km.codebook);
        model.basis = std::move(nmf.basis);
        model.coefficients = std::move(nmf.coefficients);
        for (const auto& rec : ds.records)
            model.ids.push_back(rec.id);
        save_model(options.model_out, model);
        std::printf("trained on %zu images (%zu classes), model written to %s\n",
                    ds.records.size(), ds.classes.size(), options.model_out.c_str());
    });
}

int run_query(const QueryOptions& options) {
    return guarded([&] {
        const ModelContainer model = load_model(options.model_path);
        const PipelineConfig& cfg = model.config;
        const std::size_t db_size = model.coefficients.cols();

        ImageRecord image = load_image(options.image_path);
        Matrix qd = extract_patches(image, cfg.patch_size, cfg.stride);
        std::vector<double> hist = quantize_image(qd, model.codebook);
        NmfProjection proj = nmf_project(hist, model.basis, cfg.nmf_max_iters, cfg.nmf_tol,
                                         derive_seed(cfg.seed, kSeedQuery));

        std::vector<double> scores;
        if (options.baseline) {
            scores = baseline_cosine_scores(proj.coefficients, model.coefficients);
        } else {
            Matrix nodes(model.basis.cols(), db_size + 1);
            std::copy(proj.coefficients.begin(), proj.coefficients.end(), nodes.col(0));
            for (std::size_t j = 0; j < db_size; ++j)
                std::copy(model.coefficients.col(j), model.coefficients.col(j) + nodes.rows(),
                          nodes.col(j + 1));
            TransitionMatrix p =
                build_graph(nodes, std::min(cfg.graph_k, db_size), cfg.sigma_mode);
            scores = transduce(p, cfg.transduce_iters);
        }

        const std::vector<std::size_t> ranking = rank_by_score(scores);
        const std::size_t shown = std::min(options.top_n, ranking.size());
        for (std::size_t r = 0; r < shown; ++r) {
            const std::size_t node = ranking[r];
            std::printf("%zu,%s,%s\n", r + 1, model.ids[node - 1].c_str(),
                        fmt_score(scores[node]).c_str());
        }
    });
}

int run_evaluate(const EvaluateOptions& options) {
    return guarded([&] {
        const PipelineConfig cfg = load_config_or_default(options.config_path);
        LabeledDataset ds = scan_dataset(options.data_dir);
        if (ds.classes.size() < 2)
            throw DataError("evaluate: need at least 2 classes, found " +
                            std::to_string(ds.classes.size()));

        CrossValResult cv = run_cross_validation(ds, cfg);
        for (const auto& w : cv.contextual.warnings)
            std::fprintf(stderr, "warning: %s\n", w.c_str());

        const fs::path report_path(options.report_out);
        write_text_file(report_path, report_to_csv(cv.contextual, cv.baseline));

        const fs::path dir = report_path.parent_path();
        const std::string stem = report_path.stem().string();
        for (const EvalReport* report : {&cv.contextual, &cv.baseline}) {
            for (std::size_t f = 0; f < report->per_fold_roc.size(); ++f) {
                if (report->per_fold_roc[f].fpr.empty())
                    continue;
                const fs::path roc_path =
                    dir / (stem + "_roc_" + report->method + "_fold" + std::to_string(f) +
                           ".csv");
                write_text_file(roc_path, roc_to_csv(report->per_fold_roc[f]));
            }
        }
        std::printf("contextual mean auc %s (macro %s)\n",
                    fmt_score(cv.contextual.mean_auc).c_str(),
                    fmt_score(cv.contextual.mean_macro_auc).c_str());
        std::printf("baseline   mean auc %s (macro %s)\n",
                    fmt_score(cv.baseline.mean_auc).c_str(),
                    fmt_score(cv.baseline.mean_macro_auc).c_str());
    });
}

int run_synth(const SynthOptions& options) {
    return guarded([&] {
        if (options.classes == 0 || options.per_class == 0)
            throw ConfigError("synth: classes and per-class must be positive");
        if (options.noise_sigma < 0.0)
            throw ConfigError("synth: noise must be nonnegative");
        SynthSpec spec;
        spec.classes = options.classes;
        spec.per_class = options.per_class;
        spec.noise_sigma = options.noise_sigma;
        spec.seed = options.seed;
        const std::size_t written = generate_synthetic_corpus(options.out_dir, spec);
        std::printf("wrote %zu images under %s\n", written, options.out_dir.c_str());
    });
}

} // namespace hfret
