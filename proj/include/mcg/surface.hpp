#pragma once

#include "mcg/error.hpp"

#include <string>

namespace mcg {

// Compact surface with boundary. genus counts handles when orientable and
// crosscaps when not; a non-orientable surface has genus >= 1.
struct Surface {
    bool orientable = false;
    int genus = 0;
    int boundary = 0;

    friend bool operator==(const Surface&, const Surface&) = default;
};

int euler(const Surface& s);

// Recover the genus from (orientability, chi, boundary count). Throws
// errc::parity when 2 - chi - boundary is odd in the orientable case and
// errc::negative_genus when the resulting genus is out of range.
Surface classify_from_chi(bool orientable, int chi, int boundary);

// Mapping class group presentations need special handling exactly for
// (1, n<=4), (2, n<=3) and (3, n<=2): the complex of curves is not simply
// connected there.
bool is_sporadic(int genus, int boundary);

std::string to_string(const Surface& s);

} // namespace mcg
