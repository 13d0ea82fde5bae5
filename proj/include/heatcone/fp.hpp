#pragma once

#include <cstdlib>
#include <string>

namespace heatcone::fp {

// Float evaluation tier, selected once per process by HEATCONE_PRECISION:
// "double" (default) or "extended" (long-double accumulation).
inline bool extended_precision() {
    static const bool v = [] {
        const char* e = std::getenv("HEATCONE_PRECISION");
        return e != nullptr && std::string(e) == "extended";
    }();
    return v;
}

}  // namespace heatcone::fp
