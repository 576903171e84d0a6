// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/model_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "hfret/errors.hpp"

namespace hfret {

namespace {

class Writer {
public:
    explicit Writer(const std::filesystem::path& path)
        : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_)
            throw IoError("model: cannot open for writing: " + path.string());
    }

    void bytes(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    }
    void u16(std::uint16_t v) { unsigned_le(v, 2); }
    void u32(std::uint32_t v) { unsigned_le(v, 4); }
    void u64(std::uint64_t v) { unsigned_le(v, 8); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

    void name(const std::string& s) {
        if (s.size() > 0xFFFF)
            throw IoError("model: section name too long");
        u16(static_cast<std::uint16_t>(s.size()));
        bytes(s.data(), s.size());
    }

    void matrix_row_major(const std::string& section, const Matrix& m, bool transposed) {
        name(section);
        const std::size_t rows = transposed ? m.cols() : m.rows();
        const std::size_t cols = transposed ? m.rows() : m.cols();
        u64(rows);
        u64(cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                f64(transposed ? m(c, r) : m(r, c));
    }

    void strings(const std::string& section, const std::vector<std::string>& items) {
        name(section);
        u64(items.size());
        for (const auto& s : items) {
            u32(static_cast<std::uint32_t>(s.size()));
            bytes(s.data(), s.size());
        }
    }

    void finish() {
        out_.flush();
        if (!out_)
            throw IoError("model: write failed: " + path_.string());
    }

private:
    void unsigned_le(std::uint64_t v, int width) {
        char buf[8];
        for (int i = 0; i < width; ++i)
            buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
        bytes(buf, static_cast<std::size_t>(width));
    }

    std::filesystem::path path_;
    std::ofstream out_;
};

class Reader {
public:
    explicit Reader(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ModelLoadError("model: cannot open " + path.string());
        buf_.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }

    void bytes(void* p, std::size_t n) {
        if (pos_ + n > buf_.size())
            throw ModelLoadError("model: truncated file");
        std::memcpy(p, buf_.data() + pos_, n);
        pos_ += n;
    }
    std::uint16_t u16() { return static_cast<std::uint16_t>(unsigned_le(2)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(unsigned_le(4)); }
    std::uint64_t u64() { return unsigned_le(8); }
    double f64() { return std::bit_cast<double>(u64()); }

    std::string name() {
        std::string s(u16(), '\0');
        bytes(s.data(), s.size());
        return s;
    }

    Matrix matrix_row_major() {
        const std::uint64_t rows = u64();
        const std::uint64_t cols = u64();
        if (rows == 0 || cols == 0 || rows > (1u << 28) || cols > (1u << 28) ||
            (buf_.size() - pos_) / 8 < rows * cols)
            throw ModelLoadError("model: implausible matrix dimensions");
        Matrix m(rows, cols);
        for (std::uint64_t r = 0; r < rows; ++r)
            for (std::uint64_t c = 0; c < cols; ++c)
                m(r, c) = f64();
        return m;
    }

    std::vector<std::string> strings() {
        const std::uint64_t count = u64();
        if (count > buf_.size())
            throw ModelLoadError("model: implausible string count");
        std::vector<std::string> items(count);
        for (auto& s : items) {
            s.resize(u32());
            bytes(s.data(), s.size());
        }
        return items;
    }

private:
    std::uint64_t unsigned_le(int width) {
        if (pos_ + static_cast<std::size_t>(width) > buf_.size())
            throw ModelLoadError("model: truncated file");
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf_[pos_ + i])) << (8 * i);
        pos_ += static_cast<std::size_t>(width);
        return v;
    }

    std::vector<char> buf_;
    std::size_t pos_ = 0;
};

std::vector<std::string> config_lines(const PipelineConfig& cfg) {
    std::vector<std::string> lines;
    std::string text = to_text(cfg);
    std::size_t start = 0;
    while (start < text.size()) {
        const auto nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        if (nl == std::string::npos)
            break;
        start = nl + 1;
    }
    return lines;
}

} // namespace

void save_model(const std::filesystem::path& path, const ModelContainer& model) {
    Writer w(path);
    w.bytes(kModelMagic, sizeof(kModelMagic));
    w.u32(kModelFormatVersion);
    w.u32(5);
    w.matrix_row_major("codebook", model.codebook.centroids, /*transposed=*/true);
    w.matrix_row_major("basis", model.basis, /*transposed=*/false);
    w.matrix_row_major("coefficients", model.coefficients, /*transposed=*/false);
    w.strings("ids", model.ids);
    w.strings("config", config_lines(model.config));
    w.finish();
}

ModelContainer load_model(const std::filesystem::path& path) {
    Reader r(path);
    char magic[4];
    r.bytes(magic, sizeof(magic));
    if (std::memcmp(magic, kModelMagic, sizeof(magic)) != 0)
        throw ModelLoadError("model: bad magic in " + path.string());
    if (r.u32() != kModelFormatVersion)
        throw ModelLoadError("model: unsupported format version in " + path.string());

    const std::uint32_t sections = r.u32();
    ModelContainer model;
    bool have_codebook = false, have_basis = false, have_coefficients = false,
         have_ids = false, have_config = false;
    for (std::uint32_t s = 0; s < sections; ++s) {
        const std::string section = r.name();
        if (section == "codebook") {
            model.codebook.centroids = transpose(r.matrix_row_major());
            have_codebook = true;
        } else if (section == "basis") {
            model.basis = r.matrix_row_major();
            have_basis = true;
        } else if (section == "coefficients") {
            model.coefficients = r.matrix_row_major();
            have_coefficients = true;
        } else if (section == "ids") {
            model.ids = r.strings();
            have_ids = true;
        } else if (section == "config") {
            std::string text;
            for (const auto& line : r.strings())
                text += line + "\n";
            try {
                model.config = parse_config_text(text);
            } catch (const ConfigError& e) {
                throw ModelLoadError(std::string("model: bad config section: ") + e.what());
            }
            have_config = true;
        } else {
            throw ModelLoadError("model: unknown section '" + section + "'");
        }
    }
    if (!have_codebook || !have_basis || !have_coefficients || !have_ids || !have_config)
        throw ModelLoadError("model: missing sections in " + path.string());

    const std::size_t k = model.codebook.k();
    if (model.basis.rows() != k)
        throw ModelLoadError("model: basis rows disagree with codebook size");
    if (model.coefficients.rows() != model.basis.cols())
        throw ModelLoadError("model: coefficient rows disagree with basis rank");
    if (model.ids.size() != model.coefficients.cols())
        throw ModelLoadError("model: id count disagrees with coefficient columns");
    if (model.config.codebook_k != k || model.config.nmf_rank != model.basis.cols())
        throw ModelLoadError("model: config snapshot disagrees with matrix dimensions");
    if (model.config.patch_size * model.config.patch_size != model.codebook.dim())
        throw ModelLoadError("model: config patch_size disagrees with descriptor dimension");
    return model;
}

} // namespace hfret
