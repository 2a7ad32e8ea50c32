#pragma once

#include "mcg/word.hpp"

#include <string>
#include <vector>

namespace mcg {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    // Set when a Tietze move changed the group without a witness; such a
    // presentation no longer claims to present the original group.
    bool extended = false;

    bool has_generator(const std::string& name) const;
    // Throws errc::malformed_data on duplicate/invalid names or on a relator
    // letter that is not a declared generator.
    void validate() const;
};

// Text format, one declaration per line:
//   gens: A1 A2 U
//   rel: A1 U A1 U
//   rel: U A1 U^-1 = A1^-1
// '#' starts a comment, blank lines are skipped, '=' abbreviates LHS RHS^-1.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

// JSON mirror: {"generators": [...], "relators": [[["A1",1],["U",-1]], ...]}
Presentation presentation_from_json(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);

} // namespace mcg
