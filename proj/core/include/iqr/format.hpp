#pragma once

#include <string>

namespace iqr {

// 17 significant digits, '.' decimal, locale-independent; round-trips doubles.
std::string fmt17(double v);

// Fixed-ish general formatting for human-readable tables.
std::string fmt_short(double v);

}  // namespace iqr
