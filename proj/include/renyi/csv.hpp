#pragma once

#include <optional>
#include <string>

#include "renyi/features.hpp"

namespace renyi {

/// Loads an RFC-4180-style CSV (header row required, UTF-8, quoted fields
/// allowed). Every non-label cell must parse as a number; failures report
/// 1-based row/column coordinates. If label_column names a header, that
/// column is extracted as the class label.
Dataset load_csv(const std::string& path,
                 const std::optional<std::string>& label_column = std::nullopt);

} // namespace renyi
