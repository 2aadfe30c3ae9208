#include <qdunkl/parallel.hpp>

#include <cstdlib>
#include <string>

namespace qdunkl
{

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("QDUNKL_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception &) {
        }
    }
    return 1;
}

} // namespace qdunkl
