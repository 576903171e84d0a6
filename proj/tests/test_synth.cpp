// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <filesystem>

#include "hfret/dataset.hpp"
#include "hfret/synth.hpp"
#include "test_support.hpp"

using namespace hfret;
using test::TempDir;
using test::read_file;

TEST_CASE("generator writes classes x per_class files in the layout") {
    TempDir tmp;
    SynthSpec spec;
    spec.classes = 4;
    spec.per_class = 5;
    spec.image_size = 16;
    spec.noise_sigma = 0.02;
    spec.seed = 1;
    CHECK(generate_synthetic_corpus(tmp.path() / "c", spec) == 20);

    LabeledDataset ds = scan_dataset(tmp.path() / "c");
    CHECK(ds.records.size() == 20);
    CHECK(ds.classes.size() == 4);
    CHECK(ds.classes.front() == "class000");
    CHECK(ds.records.front().id == "class000/img000.pgm");
}

TEST_CASE("zero noise makes every image of a class identical") {
    TempDir tmp;
    SynthSpec spec;
    spec.classes = 2;
    spec.per_class = 3;
    spec.image_size = 24;
    spec.noise_sigma = 0.0;
    spec.seed = 9;
    generate_synthetic_corpus(tmp.path() / "c", spec);

    const auto base = read_file(tmp.path() / "c" / "class001" / "img000.pgm");
    CHECK(base == read_file(tmp.path() / "c" / "class001" / "img001.pgm"));
    CHECK(base == read_file(tmp.path() / "c" / "class001" / "img002.pgm"));
    // different classes are different gratings
    CHECK(base != read_file(tmp.path() / "c" / "class000" / "img000.pgm"));
}

TEST_CASE("generation is deterministic per seed") {
    TempDir tmp;
    SynthSpec spec;
    spec.classes = 2;
    spec.per_class = 2;
    spec.image_size = 16;
    spec.noise_sigma = 0.1;
    spec.seed = 5;
    generate_synthetic_corpus(tmp.path() / "a", spec);
    generate_synthetic_corpus(tmp.path() / "b", spec);
    for (const char* rel : {"class000/img000.pgm", "class000/img001.pgm",
                            "class001/img000.pgm", "class001/img001.pgm"})
        CHECK(read_file(tmp.path() / "a" / rel) == read_file(tmp.path() / "b" / rel));

    spec.seed = 6;
    generate_synthetic_corpus(tmp.path() / "d", spec);
    CHECK(read_file(tmp.path() / "a" / "class000/img000.pgm") !=
          read_file(tmp.path() / "d" / "class000/img000.pgm"));
}

TEST_CASE("invalid parameters are rejected") {
    TempDir tmp;
    SynthSpec spec;
    spec.classes = 0;
    CHECK_THROWS_AS(generate_synthetic_corpus(tmp.path() / "x", spec),
                    std::invalid_argument);
    spec.classes = 1;
    spec.noise_sigma = -0.5;
    CHECK_THROWS_AS(generate_synthetic_corpus(tmp.path() / "x", spec),
                    std::invalid_argument);
}
