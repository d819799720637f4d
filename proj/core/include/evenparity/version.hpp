#pragma once

namespace evenparity {

/// Library version, e.g. "0.1.0".
const char* version_string();

} // namespace evenparity
