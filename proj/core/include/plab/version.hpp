#pragma once

#define PLAB_VERSION "0.1.0"

namespace plab {

inline const char* version() { return PLAB_VERSION; }

} // namespace plab
