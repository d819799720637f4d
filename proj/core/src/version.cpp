#include "evenparity/version.hpp"

namespace evenparity {

const char* version_string() { return EVENPARITY_VERSION; }

} // namespace evenparity
