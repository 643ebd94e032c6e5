#pragma once

#include <string>

#include "json.hpp"

namespace bz::io {

// TOML document as the equivalent JSON value. Floats and date-times have no
// meaning in a job and are rejected.
nlohmann::json toml_to_json(const std::string& text);

}  // namespace bz::io
