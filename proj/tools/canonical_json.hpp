#pragma once

#include <string>

#include "json.hpp"

namespace cli {

/// Key-sorted, two-space indented JSON with every floating-point value written
/// as %.17g, so output bytes are a pure function of the values. Non-finite
/// numbers become null.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace cli
