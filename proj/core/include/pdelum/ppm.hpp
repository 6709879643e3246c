#ifndef PDELUM_PPM_HPP
#define PDELUM_PPM_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdelum/raster.hpp"

namespace pdelum {

/// Malformed PPM input; offset is the byte position the parser rejected.
class PpmParseError : public std::runtime_error {
public:
    PpmParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes a binary P6 PPM with maxval 255. Each 8-bit sample maps to v/255.
/// Header comments (#...) are accepted.
ColorImage load_ppm(std::span<const std::uint8_t> bytes);

/// Encodes RGB in [0,1] as P6/maxval-255; sample = round-half-up(v * 255),
/// defensively clamped to [0,255]. Header is "P6\n<w> <h>\n255\n".
std::vector<std::uint8_t> save_ppm(const ColorImage& rgb);

ColorImage load_ppm_file(const std::filesystem::path& path);
void save_ppm_file(const ColorImage& rgb, const std::filesystem::path& path);

} // namespace pdelum

#endif
