// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hfret/errors.hpp"

namespace hfret {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw ConfigError("config: bad integer for " + key + ": '" + value + "'");
    return out;
}

double parse_f64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size())
            throw ConfigError("config: bad number for " + key + ": '" + value + "'");
        return out;
    } catch (const std::logic_error&) {
        throw ConfigError("config: bad number for " + key + ": '" + value + "'");
    }
}

SigmaMode parse_sigma(const std::string& value) {
    if (value == "auto")
        return SigmaMode::automatic();
    if (value.rfind("fixed:", 0) == 0)
        return SigmaMode::fixed(parse_f64("sigma_mode", value.substr(6)));
    throw ConfigError("config: sigma_mode must be 'auto' or 'fixed:<value>', got '" + value + "'");
}

} // namespace

PipelineConfig parse_config_text(const std::string& text) {
    PipelineConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "patch_size")
            cfg.patch_size = parse_u64(key, value);
        else if (key == "stride")
            cfg.stride = parse_u64(key, value);
        else if (key == "codebook_k")
            cfg.codebook_k = parse_u64(key, value);
        else if (key == "nmf_rank")
            cfg.nmf_rank = parse_u64(key, value);
        else if (key == "nmf_max_iters")
            cfg.nmf_max_iters = parse_u64(key, value);
        else if (key == "nmf_tol")
            cfg.nmf_tol = parse_f64(key, value);
        else if (key == "graph_k")
            cfg.graph_k = parse_u64(key, value);
        else if (key == "transduce_iters")
            cfg.transduce_iters = parse_u64(key, value);
        else if (key == "sigma_mode")
            cfg.sigma_mode = parse_sigma(value);
        else if (key == "folds")
            cfg.folds = parse_u64(key, value);
        else if (key == "seed")
            cfg.seed = parse_u64(key, value);
        else
            throw ConfigError("config: unknown key '" + key + "' on line " +
                              std::to_string(lineno));
    }
    return cfg;
}

PipelineConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

void validate(const PipelineConfig& c) {
    if (c.patch_size == 0 || c.stride == 0 || c.codebook_k == 0 || c.nmf_rank == 0 ||
        c.nmf_max_iters == 0 || c.graph_k == 0 || c.transduce_iters == 0)
        throw ConfigError("config: all counts must be positive");
    if (!(c.nmf_tol > 0.0))
        throw ConfigError("config: nmf_tol must be positive");
    if (c.nmf_rank > c.codebook_k)
        throw ConfigError("config: nmf_rank must not exceed codebook_k");
    if (c.folds < 2)
        throw ConfigError("config: folds must be at least 2");
    if (!c.sigma_mode.is_auto && !(c.sigma_mode.value > 0.0))
        throw ConfigError("config: fixed sigma must be positive");
}

std::string to_text(const PipelineConfig& c) {
    std::ostringstream out;
    out << "patch_size=" << c.patch_size << "\n";
    out << "stride=" << c.stride << "\n";
    out << "codebook_k=" << c.codebook_k << "\n";
    out << "nmf_rank=" << c.nmf_rank << "\n";
    out << "nmf_max_iters=" << c.nmf_max_iters << "\n";
    char tol[64];
    std::snprintf(tol, sizeof(tol), "%.17g", c.nmf_tol);
    out << "nmf_tol=" << tol << "\n";
    out << "graph_k=" << c.graph_k << "\n";
    out << "transduce_iters=" << c.transduce_iters << "\n";
    if (c.sigma_mode.is_auto) {
        out << "sigma_mode=auto\n";
    } else {
        char sig[64];
        std::snprintf(sig, sizeof(sig), "%.17g", c.sigma_mode.value);
        out << "sigma_mode=fixed:" << sig << "\n";
    }
    out << "folds=" << c.folds << "\n";
    out << "seed=" << c.seed << "\n";
    return out.str();
}

} // namespace hfret
