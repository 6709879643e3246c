#include "pdelum/csv.hpp"

#include <charconv>

namespace pdelum {

std::string format_g9(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

std::string format_int(long long v) {
    return std::to_string(v);
}

} // namespace pdelum
