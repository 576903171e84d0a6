// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
// hfret: bag-of-words image retrieval with histogram factorization and
// graph-transduction ranking.
//
//   hfret synth    --out corpus/ [--classes 40] [--per-class 50] [--noise 0.05] [--seed 0]
//   hfret train    --data corpus/ [--config cfg.txt] --model model.hskm
//   hfret query    --model model.hskm --image q.pgm [--top 10] [--baseline]
//   hfret evaluate --data corpus/ [--config cfg.txt] --out report.csv

#include <CLI11.hpp>

#include "hfret/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"bag-of-words image retrieval with histogram factorization"};
    app.require_subcommand(1);

    hfret::TrainOptions train;
    CLI::App* train_cmd = app.add_subcommand("train", "train codebook + factorization on a corpus");
    train_cmd->add_option("--data", train.data_dir, "corpus root (<class>/<image>.pgm)")
        ->required();
    train_cmd->add_option("--config", train.config_path, "key=value config file");
    train_cmd->add_option("--model", train.model_out, "output model path")->required();

    hfret::QueryOptions query;
    CLI::App* query_cmd = app.add_subcommand("query", "rank database images against a query image");
    query_cmd->add_option("--model", query.model_path, "trained model path")->required();
    query_cmd->add_option("--image", query.image_path, "query image (PGM P5)")->required();
    query_cmd->add_option("--top", query.top_n, "lines to print");
    query_cmd->add_flag("--baseline", query.baseline, "use pairwise cosine scores");

    hfret::EvaluateOptions evaluate;
    CLI::App* eval_cmd = app.add_subcommand("evaluate", "k-fold cross-validation with ROC/AUC");
    eval_cmd->add_option("--data", evaluate.data_dir, "corpus root")->required();
    eval_cmd->add_option("--config", evaluate.config_path, "key=value config file");
    eval_cmd->add_option("--out", evaluate.report_out, "report CSV path")->required();

    hfret::SynthOptions synth;
    CLI::App* synth_cmd = app.add_subcommand("synth", "generate a synthetic grating corpus");
    synth_cmd->add_option("--out", synth.out_dir, "corpus output directory")->required();
    synth_cmd->add_option("--classes", synth.classes, "number of classes");
    synth_cmd->add_option("--per-class", synth.per_class, "images per class");
    synth_cmd->add_option("--noise", synth.noise_sigma, "pixel noise stddev as fraction of 255");
    synth_cmd->add_option("--seed", synth.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? hfret::kExitOk : hfret::kExitConfig;
    }

    if (train_cmd->parsed())
        return hfret::run_train(train);
    if (query_cmd->parsed())
        return hfret::run_query(query);
    if (eval_cmd->parsed())
        return hfret::run_evaluate(evaluate);
    return hfret::run_synth(synth);
}
