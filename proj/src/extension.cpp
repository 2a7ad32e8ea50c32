#include "mcg/extension.hpp"

#include "mcg/error.hpp"

#include <set>

namespace mcg {

Presentation extension_presentation(const ExtensionData& x) {
    x.kernel.validate();
    x.quotient.validate();

    auto lifted = [&](const std::string& h) {
        auto it = x.lift.find(h);
        return it == x.lift.end() ? h : it->second;
    };
    auto check_kernel_word = [&](const Word& w, const char* what) {
        for (const auto& l : w)
            if (!x.kernel.has_generator(l.gen))
                throw error(errc::malformed_data,
                            std::string(what) + " must be a word in kernel generators");
    };

    Presentation out;
    out.generators = x.kernel.generators;
    std::set<std::string> seen(out.generators.begin(), out.generators.end());
    for (const auto& h : x.quotient.generators) {
        std::string name = lifted(h);
        if (!seen.insert(name).second)
            throw error(errc::malformed_data,
                        "lifted generator '" + name + "' collides with a kernel generator");
        out.generators.push_back(name);
    }

    out.relators = x.kernel.relators;
    for (std::size_t i = 0; i < x.quotient.relators.size(); ++i) {
        Word w;
        for (const auto& l : x.quotient.relators[i]) w.push_back({lifted(l.gen), l.exp});
        if (auto it = x.correction.find(i); it != x.correction.end()) {
            check_kernel_word(it->second, "correction");
            w = concat(w, inverse(it->second));
        }
        out.relators.push_back(free_reduce(w));
    }
    for (const auto& [key, w] : x.correction)
        if (key >= x.quotient.relators.size())
            throw error(errc::malformed_data, "correction index out of range");

    for (const auto& h : x.quotient.generators) {
        for (const auto& k : x.kernel.generators) {
            Word conj;
            auto it = x.action.find({h, k});
            if (it != x.action.end()) {
                check_kernel_word(it->second, "action");
                conj = it->second;
            } else if (x.kernel_central) {
                conj = Word{{k, 1}};
            } else {
                throw error(errc::malformed_data,
                            "missing action entry for (" + h + ", " + k + ")");
            }
            std::string hn = lifted(h);
            Word rel = free_reduce(concat(
                Word{{hn, 1}, {k, 1}, {hn, -1}}, inverse(conj)));
            if (!rel.empty()) out.relators.push_back(std::move(rel));
        }
    }
    for (const auto& [key, w] : x.action)
        if (!x.quotient.has_generator(key.first) || !x.kernel.has_generator(key.second))
            throw error(errc::malformed_data, "action entry names unknown generators");

    out.validate();
    return out;
}

} // namespace mcg
