// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <cstring>

#include "hfret/errors.hpp"
#include "hfret/model_io.hpp"
#include "hfret/rng.hpp"
#include "test_support.hpp"

using namespace hfret;
using test::TempDir;
using test::random_matrix;
using test::read_file;

namespace {

ModelContainer sample_model(Rng& rng) {
    ModelContainer m;
    m.config.patch_size = 4;
    m.config.stride = 2;
    m.config.codebook_k = 6;
    m.config.nmf_rank = 3;
    m.config.seed = 17;
    m.codebook.centroids = random_matrix(16, 6, rng, -1.0, 1.0); // D=16, K=6
    m.basis = random_matrix(6, 3, rng, 0.0, 1.0);
    m.coefficients = random_matrix(3, 5, rng, 0.0, 1.0);
    m.ids = {"a/0.pgm", "a/1.pgm", "b/0.pgm", "b/1.pgm", "b/2.pgm"};
    return m;
}

} // namespace

TEST_CASE("save/load round-trips bit-exactly") {
    Rng rng(7);
    ModelContainer m = sample_model(rng);
    // throw in exact special values
    m.basis(0, 0) = 0.0;
    m.basis(1, 0) = 5e-324;                  // smallest denormal
    m.coefficients(0, 0) = 0.1 + 0.2;        // not exactly 0.3
    m.codebook.centroids(3, 2) = -0.0;

    TempDir tmp;
    const auto path = tmp.path() / "m.hskm";
    save_model(path, m);
    ModelContainer r = load_model(path);

    CHECK(r.codebook.centroids == m.codebook.centroids);
    CHECK(r.basis == m.basis);
    CHECK(r.coefficients == m.coefficients);
    CHECK(r.ids == m.ids);
    CHECK(r.config == m.config);
    CHECK(std::memcmp(r.basis.data(), m.basis.data(), sizeof(double) * m.basis.size()) == 0);
}

TEST_CASE("saving twice produces identical bytes") {
    Rng rng(8);
    ModelContainer m = sample_model(rng);
    TempDir tmp;
    save_model(tmp.path() / "a.hskm", m);
    save_model(tmp.path() / "b.hskm", m);
    CHECK(read_file(tmp.path() / "a.hskm") == read_file(tmp.path() / "b.hskm"));
}

TEST_CASE("the header pins magic and version") {
    Rng rng(9);
    ModelContainer m = sample_model(rng);
    TempDir tmp;
    const auto path = tmp.path() / "m.hskm";
    save_model(path, m);
    std::string bytes = read_file(path);
    REQUIRE(bytes.size() > 12);
    CHECK(bytes.substr(0, 4) == "HSKM");
    // format_version = 1, little-endian u32
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 0);
    CHECK(bytes[6] == 0);
    CHECK(bytes[7] == 0);
}

TEST_CASE("corrupt files are rejected") {
    Rng rng(10);
    ModelContainer m = sample_model(rng);
    TempDir tmp;
    const auto path = tmp.path() / "m.hskm";
    save_model(path, m);
    std::string bytes = read_file(path);

    SUBCASE("bad magic") {
        std::string bad = bytes;
        bad[0] = 'X';
        test::write_file(tmp.path() / "bad.hskm", bad);
        CHECK_THROWS_AS(load_model(tmp.path() / "bad.hskm"), ModelLoadError);
    }
    SUBCASE("bad version") {
        std::string bad = bytes;
        bad[4] = 2;
        test::write_file(tmp.path() / "bad.hskm", bad);
        CHECK_THROWS_AS(load_model(tmp.path() / "bad.hskm"), ModelLoadError);
    }
    SUBCASE("truncation") {
        test::write_file(tmp.path() / "bad.hskm", bytes.substr(0, bytes.size() / 2));
        CHECK_THROWS_AS(load_model(tmp.path() / "bad.hskm"), ModelLoadError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_model(tmp.path() / "nope.hskm"), ModelLoadError);
    }
}

TEST_CASE("dimension consistency is checked on load") {
    Rng rng(11);
    ModelContainer m = sample_model(rng);
    m.ids.pop_back(); // now inconsistent with coefficients
    TempDir tmp;
    save_model(tmp.path() / "m.hskm", m);
    CHECK_THROWS_AS(load_model(tmp.path() / "m.hskm"), ModelLoadError);

    ModelContainer m2 = sample_model(rng);
    m2.config.nmf_rank = 2; // disagrees with basis columns
    save_model(tmp.path() / "m2.hskm", m2);
    CHECK_THROWS_AS(load_model(tmp.path() / "m2.hskm"), ModelLoadError);
}
