#include "pdelum/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace pdelum {

PpmParseError::PpmParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

bool is_ppm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Skips whitespace and '#' comments; leaves pos at the next token byte.
void skip_separators(std::span<const std::uint8_t> b, std::size_t& pos) {
    while (pos < b.size()) {
        if (is_ppm_space(b[pos])) {
            ++pos;
        } else if (b[pos] == '#') {
            while (pos < b.size() && b[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
}

unsigned parse_uint(std::span<const std::uint8_t> b, std::size_t& pos, const char* field) {
    skip_separators(b, pos);
    if (pos >= b.size() || b[pos] < '0' || b[pos] > '9')
        throw PpmParseError(std::string("expected ") + field, pos);
    unsigned long v = 0;
    while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
        v = v * 10 + (b[pos] - '0');
        if (v > 1000000000ul) throw PpmParseError(std::string(field) + " out of range", pos);
        ++pos;
    }
    return static_cast<unsigned>(v);
}

std::uint8_t to_byte(double v) {
    v = std::clamp(v, 0.0, 1.0);
    const double scaled = std::floor(v * 255.0 + 0.5); // round half up
    return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

} // namespace

ColorImage load_ppm(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        if (bytes.size() >= 2 && bytes[0] == 'P')
            throw PpmParseError("unsupported magic", 0);
        throw PpmParseError("not a PPM file", 0);
    }
    pos = 2;
    const unsigned width = parse_uint(bytes, pos, "width");
    const unsigned height = parse_uint(bytes, pos, "height");
    const unsigned maxval = parse_uint(bytes, pos, "maxval");
    if (width == 0 || height == 0)
        throw PpmParseError("zero image dimension", pos);
    if (maxval != 255)
        throw PpmParseError("unsupported maxval " + std::to_string(maxval), pos);
    if (pos >= bytes.size() || !is_ppm_space(bytes[pos]))
        throw PpmParseError("expected whitespace after maxval", pos);
    ++pos; // single whitespace byte, then raw samples

    const std::size_t need = static_cast<std::size_t>(width) * height * 3;
    if (bytes.size() - pos < need)
        throw PpmParseError("truncated payload", bytes.size());

    Raster r(static_cast<int>(width), static_cast<int>(height));
    Raster g(static_cast<int>(width), static_cast<int>(height));
    Raster b(static_cast<int>(width), static_cast<int>(height));
    auto rd = r.data(), gd = g.data(), bd = b.data();
    for (std::size_t i = 0; i < static_cast<std::size_t>(width) * height; ++i) {
        rd[i] = bytes[pos + 3 * i] / 255.0;
        gd[i] = bytes[pos + 3 * i + 1] / 255.0;
        bd[i] = bytes[pos + 3 * i + 2] / 255.0;
    }
    return ColorImage{ColorModel::RGB, {std::move(r), std::move(g), std::move(b)}};
}

std::vector<std::uint8_t> save_ppm(const ColorImage& rgb) {
    if (rgb.model != ColorModel::RGB)
        throw std::invalid_argument("save_ppm: input must be RGB");
    const int w = rgb.width(), h = rgb.height();
    std::string header =
        "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + static_cast<std::size_t>(w) * h * 3);
    const auto rd = rgb.planes[0].data();
    const auto gd = rgb.planes[1].data();
    const auto bd = rgb.planes[2].data();
    for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
        out.push_back(to_byte(rd[i]));
        out.push_back(to_byte(gd[i]));
        out.push_back(to_byte(bd[i]));
    }
    return out;
}

ColorImage load_ppm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_ppm(bytes);
}

void save_ppm_file(const ColorImage& rgb, const std::filesystem::path& path) {
    const auto bytes = save_ppm(rgb);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + path.string());
}

} // namespace pdelum
