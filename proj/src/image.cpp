// Copyright (C) 2026 hfret authors
// SPDX-License-Identifier: Apache-2.0
//
#include "hfret/image.hpp"

#include <cctype>
#include <fstream>
#include <limits>

#include "hfret/errors.hpp"

namespace hfret {

namespace {

bool is_pnm_space(int c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// One or more whitespace bytes between header tokens.
void skip_space(const std::vector<char>& buf, std::size_t& pos, const std::string& where) {
    if (pos >= buf.size() || !is_pnm_space(buf[pos]))
        throw MalformedImage("pgm: expected whitespace " + where);
    while (pos < buf.size() && is_pnm_space(buf[pos]))
        ++pos;
}

std::size_t parse_uint(const std::vector<char>& buf, std::size_t& pos, const std::string& what) {
    if (pos >= buf.size() || !std::isdigit(static_cast<unsigned char>(buf[pos])))
        throw MalformedImage("pgm: expected " + what);
    std::size_t value = 0;
    while (pos < buf.size() && std::isdigit(static_cast<unsigned char>(buf[pos]))) {
        value = value * 10 + static_cast<std::size_t>(buf[pos] - '0');
        if (value > std::numeric_limits<std::uint32_t>::max())
            throw MalformedImage("pgm: " + what + " out of range");
        ++pos;
    }
    return value;
}

} // namespace

ImageRecord load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileNotFound("cannot open image: " + path.string());
    std::vector<char> buf((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());

    if (buf.size() < 2 || buf[0] != 'P' || buf[1] != '5')
        throw MalformedImage("pgm: bad magic in " + path.string());
    std::size_t pos = 2;

    skip_space(buf, pos, "after magic");
    std::size_t width = parse_uint(buf, pos, "width");
    skip_space(buf, pos, "after width");
    std::size_t height = parse_uint(buf, pos, "height");
    skip_space(buf, pos, "after height");
    std::size_t maxval = parse_uint(buf, pos, "maxval");
    if (maxval != 255)
        throw MalformedImage("pgm: maxval must be 255 in " + path.string());
    if (width == 0 || height == 0)
        throw MalformedImage("pgm: zero dimension in " + path.string());

    // exactly one whitespace byte between maxval and the payload
    if (pos >= buf.size() || !is_pnm_space(buf[pos]))
        throw MalformedImage("pgm: missing separator before payload in " + path.string());
    ++pos;

    const std::size_t count = width * height;
    if (buf.size() - pos < count)
        throw MalformedImage("pgm: truncated payload in " + path.string());

    ImageRecord rec;
    rec.id = path.string();
    rec.width = width;
    rec.height = height;
    rec.pixels.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        rec.pixels[i] = static_cast<std::uint8_t>(buf[pos + i]);
    return rec;
}

void write_pgm(const std::filesystem::path& path, const std::uint8_t* pixels,
               std::size_t width, std::size_t height) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open for writing: " + path.string());
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels),
              static_cast<std::streamsize>(width * height));
    if (!out)
        throw IoError("write failed: " + path.string());
}

} // namespace hfret
