#include "arcoalg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace arcoalg {

unsigned threads_from_env() {
    const char* raw = std::getenv("ARCOALG_THREADS");
    if (!raw) return 1;
    try {
        std::size_t used = 0;
        const long n = std::stol(raw, &used);
        if (used != std::string(raw).size() || n < 1) return 1;
        return static_cast<unsigned>(std::min(n, 64L));
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace arcoalg
