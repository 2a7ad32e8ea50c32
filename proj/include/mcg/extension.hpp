#pragma once

#include "mcg/presentation.hpp"

#include <map>
#include <string>
#include <utility>

namespace mcg {

// Data for presenting a group extension 1 -> K -> G -> H -> 1.
// G is generated by the kernel generators together with one lift per quotient
// generator; quotient relators hold up to a kernel word (the correction), and
// conjugation of kernel generators by lifts is described by the action map.
struct ExtensionData {
    Presentation kernel;
    Presentation quotient;
    bool kernel_central = false;
    // (quotient gen, kernel gen) -> word in kernel generators equal to
    // lift . k . lift^-1. Missing entries mean k itself when kernel_central.
    std::map<std::pair<std::string, std::string>, Word> action;
    // quotient relator index -> kernel word its lift equals in G.
    // Missing entries mean the relator lifts verbatim.
    std::map<std::size_t, Word> correction;
    // optional renaming of lifted quotient generators (default: same name)
    std::map<std::string, std::string> lift;
};

// Generators: kernel generators, then lifted quotient generators.
// Relators: kernel relators, then lifted quotient relators each multiplied by
// the inverse of its correction, then lift . k . lift^-1 . action^-1.
Presentation extension_presentation(const ExtensionData& x);

} // namespace mcg
