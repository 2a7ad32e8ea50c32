#include "mcg/surface.hpp"

namespace mcg {

int euler(const Surface& s) {
    return s.orientable ? 2 - 2 * s.genus - s.boundary : 2 - s.genus - s.boundary;
}

Surface classify_from_chi(bool orientable, int chi, int boundary) {
    if (boundary < 0)
        throw error(errc::negative_genus, "negative boundary count");
    int rest = 2 - chi - boundary;
    if (orientable) {
        if (rest % 2 != 0)
            throw error(errc::parity,
                        "no orientable surface with chi=" + std::to_string(chi) + " and " +
                            std::to_string(boundary) + " boundary components");
        if (rest < 0)
            throw error(errc::negative_genus, "chi too large for an orientable surface");
        return Surface{true, rest / 2, boundary};
    }
    if (rest < 1)
        throw error(errc::negative_genus, "a non-orientable surface needs genus >= 1");
    return Surface{false, rest, boundary};
}

bool is_sporadic(int genus, int boundary) {
    switch (genus) {
    case 1: return boundary <= 4;
    case 2: return boundary <= 3;
    case 3: return boundary <= 2;
    default: return false;
    }
}

std::string to_string(const Surface& s) {
    return std::string(s.orientable ? "S_" : "N_") + std::to_string(s.genus) + "^" +
           std::to_string(s.boundary);
}

} // namespace mcg
