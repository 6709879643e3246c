#ifndef PDELUM_CSV_HPP
#define PDELUM_CSV_HPP

#include <string>

namespace pdelum {

/// Formats with 9 significant digits ("%.9g" shape), '.' decimal point,
/// locale-independent. -0 is normalized to "0" so equal values always
/// produce equal bytes.
std::string format_g9(double v);

std::string format_int(long long v);

} // namespace pdelum

#endif
