#pragma once

#include <string>

#include "qmf/qseries.hpp"

namespace qmf {

/// {"valuation": int, "precision": int, "coeffs": ["p/q", ...]} with exact
/// "numerator/denominator" coefficient strings ("5" for denominator 1).
std::string qseries_to_json(const QSeries& s);

QSeries qseries_from_json(const std::string& text);

}  // namespace qmf
