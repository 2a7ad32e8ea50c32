#include "mcg/presentation.hpp"

#include "mcg/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mcg {

bool Presentation::has_generator(const std::string& name) const {
    return std::find(generators.begin(), generators.end(), name) != generators.end();
}

static bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

void Presentation::validate() const {
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (!valid_name(g))
            throw error(errc::malformed_data, "bad generator name '" + g + "'");
        if (!seen.insert(g).second)
            throw error(errc::malformed_data, "duplicate generator '" + g + "'");
    }
    for (const auto& r : relators)
        for (const auto& l : r)
            if (!seen.count(l.gen))
                throw error(errc::malformed_data,
                            "relator uses undeclared generator '" + l.gen + "'");
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool saw_gens = false;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        line = line.substr(a);
        if (line.rfind("gens:", 0) == 0) {
            if (saw_gens)
                throw error(errc::malformed_data, "repeated 'gens:' line");
            saw_gens = true;
            std::istringstream gs(line.substr(5));
            std::string name;
            while (gs >> name) p.generators.push_back(name);
        } else if (line.rfind("rel:", 0) == 0) {
            std::string body = line.substr(4);
            auto eq = body.find('=');
            Word w;
            if (eq == std::string::npos) {
                w = parse_word(body);
            } else {
                if (body.find('=', eq + 1) != std::string::npos)
                    throw error(errc::malformed_data, "more than one '=' in relator");
                w = concat(parse_word(body.substr(0, eq)),
                           inverse(parse_word(body.substr(eq + 1))));
            }
            p.relators.push_back(std::move(w));
        } else {
            throw error(errc::malformed_data, "unrecognized line: " + line);
        }
    }
    if (!saw_gens)
        throw error(errc::malformed_data, "missing 'gens:' line");
    p.validate();
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::string out = "gens:";
    for (const auto& g : p.generators) out += " " + g;
    out += "\n";
    for (const auto& r : p.relators) {
        out += "rel:";
        for (const auto& l : r) {
            out += " " + l.gen;
            if (l.exp < 0) out += "^-1";
        }
        out += "\n";
    }
    return out;
}

Presentation presentation_from_json(const std::string& json_text) {
    Presentation p;
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
        for (const auto& r : j.at("relators")) {
            Word w;
            for (const auto& l : r) {
                int e = l.at(1).get<int>();
                if (e != 1 && e != -1)
                    throw error(errc::malformed_data, "relator letter exponent must be +-1");
                w.push_back({l.at(0).get<std::string>(), e});
            }
            p.relators.push_back(std::move(w));
        }
    } catch (const error&) {
        throw;
    } catch (const nlohmann::json::exception& ex) {
        throw error(errc::malformed_data, std::string("bad presentation json: ") + ex.what());
    }
    p.validate();
    return p;
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = p.generators;
    auto rels = nlohmann::json::array();
    for (const auto& r : p.relators) {
        auto jr = nlohmann::json::array();
        for (const auto& l : r) jr.push_back({l.gen, l.exp});
        rels.push_back(jr);
    }
    j["relators"] = rels;
    return j.dump(2);
}

} // namespace mcg
