#pragma once

namespace hsam {

inline constexpr const char* engine_version = "0.1.0";

}
