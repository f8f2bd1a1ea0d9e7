#pragma once

#include <string>

namespace runnerbench {

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

/// Scientific notation with three significant digits, e.g. 1.23e-04.
std::string format_scientific3(double v);

} // namespace runnerbench
