// mcgtool: command-line access to the curve-system census, quotient
// complexes, presentation calculus and the sporadic catalog.
//
// Exit codes: 0 success, 1 input or validation error, 2 resource limit,
// 3 verification failure (census mismatch, failed catalog check, incomplete
// determinability closure).

#include "mcg/brown.hpp"
#include "mcg/catalog.hpp"
#include "mcg/coset.hpp"
#include "mcg/error.hpp"
#include "mcg/orbit.hpp"
#include "mcg/schreier.hpp"
#include "mcg/snf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mcg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::malformed_data, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::malformed_data, "cannot write '" + path + "'");
    out << text;
}

// Presentation files: text format, or the JSON object format when the first
// non-space byte is '{'.
Presentation load_presentation(const std::string& path) {
    std::string text = read_file(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return presentation_from_json(text);
    return parse_presentation(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) out.push_back(piece);
    return out;
}

std::map<std::string, int> parse_signs(const std::string& text) {
    std::map<std::string, int> signs;
    for (const auto& item : split(text, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw error(errc::malformed_data, "bad sign assignment '" + item + "'");
        std::string name = item.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        std::string value = item.substr(eq + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t") + 1);
        if (value == "1" || value == "+1")
            signs[name] = 1;
        else if (value == "-1")
            signs[name] = -1;
        else
            throw error(errc::malformed_data, "sign must be +1 or -1, got '" + value + "'");
    }
    return signs;
}

// Cell-complex input for `pres assemble`: vertex stabilizer presentations in
// the JSON object format, group elements as word text.
BrownData brown_from_json(const std::string& text) {
    BrownData data;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        for (const auto& v : j.at("vertices")) {
            BrownVertex bv;
            bv.id = v.at("id").get<std::string>();
            bv.pres = presentation_from_json(v.at("pres").dump());
            data.vertices.push_back(std::move(bv));
        }
        for (const auto& e : j.at("edges")) {
            BrownEdge be;
            be.id = e.at("id").get<std::string>();
            be.src = e.at("src").get<std::string>();
            be.dst = e.at("dst").get<std::string>();
            be.in_tree = e.value("in_tree", false);
            if (e.contains("stab"))
                for (const auto& s : e.at("stab"))
                    be.stab.push_back({parse_word(s.at("i").get<std::string>()),
                                       parse_word(s.at("c").get<std::string>())});
            data.edges.push_back(std::move(be));
        }
        if (j.contains("triangles"))
            for (const auto& t : j.at("triangles")) {
                BrownTriangle bt;
                bt.a = t.at("a").get<std::string>();
                bt.b = t.at("b").get<std::string>();
                bt.c = t.at("c").get<std::string>();
                bt.ha = parse_word(t.value("ha", ""));
                bt.hb = parse_word(t.value("hb", ""));
                bt.hc = parse_word(t.value("hc", ""));
                bt.h = parse_word(t.value("h", ""));
                data.triangles.push_back(std::move(bt));
            }
    } catch (const error&) {
        throw;
    } catch (const nlohmann::json::exception& ex) {
        throw error(errc::malformed_data, std::string("bad cell complex json: ") + ex.what());
    }
    return data;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mapping class group toolkit for non-orientable surfaces"};
    app.require_subcommand(1);
    int rc = 0;

    // census
    int c_genus = 0, c_boundary = 0, c_dim = 1;
    std::string c_method;
    std::uint64_t c_cap = default_diagram_cap;
    auto* census = app.add_subcommand("census", "count curve-system orbit classes");
    census->add_option("--genus", c_genus, "crosscap number of the target")->required();
    census->add_option("--boundary", c_boundary, "boundary components")->required();
    census->add_option("--dim", c_dim, "curves per system (1..3)")->check(CLI::Range(1, 3));
    census->add_option("--method", c_method, "formula | enumerate | both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}));
    census->add_option("--cap", c_cap, "candidate diagram limit");
    census->callback([&] {
        std::string method = c_method;
        if (method.empty()) method = c_dim == 1 ? "both" : "enumerate";
        if (method != "enumerate" && c_dim != 1)
            throw error(errc::malformed_data, "--method " + method + " requires --dim 1");
        long long total = -1;
        if (method != "enumerate") {
            VertexCensus v = vertex_orbit_census(c_genus, c_boundary);
            std::cout << "nonseparating (orientable complement): "
                      << v.nonsep_orientable_complement << "\n";
            std::cout << "nonseparating (nonorientable complement): "
                      << v.nonsep_nonorientable_complement << "\n";
            std::cout << "separating: " << v.separating << "\n";
            total = v.total();
        }
        if (method != "formula") {
            auto reps = enumerate_orbit_simplices(c_genus, c_boundary, c_dim, c_cap);
            long long count = static_cast<long long>(reps.size());
            if (total >= 0 && count != total) {
                std::cout << "total: " << total << "\n";
                std::cerr << "census mismatch: formula " << total << " vs enumeration "
                          << count << "\n";
                rc = 3;
                return;
            }
            total = count;
        }
        std::cout << "total: " << total << "\n";
    });

    // orbit-eq
    std::string oe_a, oe_b;
    bool oe_ordered = false;
    auto* orbiteq = app.add_subcommand("orbit-eq", "compare two curve-system diagrams");
    orbiteq->add_option("a", oe_a, "first diagram json")->required();
    orbiteq->add_option("b", oe_b, "second diagram json")->required();
    orbiteq->add_flag("--ordered", oe_ordered, "respect the curve ordering");
    orbiteq->callback([&] {
        CutDiagram a = diagram_from_json(read_file(oe_a));
        CutDiagram b = diagram_from_json(read_file(oe_b));
        OrbitWitness w = orbit_equal(a, b, oe_ordered);
        if (!w.equal) {
            std::cout << "not equal\n";
            return;
        }
        std::cout << "equal\n";
        if (!w.sigma.empty()) {
            std::cout << "sigma:";
            for (int s : w.sigma) std::cout << " " << s;
            std::cout << "\n";
        }
    });

    // complex
    int x_genus = 0, x_boundary = 0;
    bool x_g1 = false;
    std::string x_out;
    std::uint64_t x_cap = default_diagram_cap;
    auto* complexcmd = app.add_subcommand("complex", "build the quotient orbit complex");
    complexcmd->add_option("--genus", x_genus, "crosscap number")->required();
    complexcmd->add_option("--boundary", x_boundary, "boundary components")->required();
    complexcmd->add_flag("--g1-symbolic", x_g1, "use the genus-1 set-system model");
    complexcmd->add_option("--out", x_out, "output json path")->required();
    complexcmd->add_option("--cap", x_cap, "candidate diagram limit");
    complexcmd->callback([&] {
        if (x_g1 && x_genus != 1)
            throw error(errc::malformed_data, "--g1-symbolic requires --genus 1");
        QuotientComplex x =
            x_g1 ? g1_symbolic_complex(x_boundary)
                 : build_quotient_complex(x_genus, x_boundary, x_cap);
        std::set<int> tree;
        std::set<int> determinable;
        try {
            tree = build_maximal_tree(x);
            determinable = determinability_closure(x, tree).determinable;
        } catch (const error& ex) {
            if (ex.code() != errc::not_applicable && ex.code() != errc::not_a_tree) throw;
            std::cerr << "note: no tree construction for this target: " << ex.what()
                      << "\n";
        }
        write_file(x_out, complex_to_json(x, tree, determinable));
        std::cout << "vertices: " << x.vertices.size() << "\n";
        std::cout << "edges: " << x.edges.size() << "\n";
        std::cout << "triangles: " << x.triangles.size() << "\n";
        std::cout << "wrote: " << x_out << "\n";
    });

    // tree
    std::string t_in;
    int t_genus = 0, t_boundary = 0;
    auto* treecmd = app.add_subcommand("tree", "maximal tree + determinability closure");
    treecmd->add_option("--in", t_in, "complex json path")->required();
    treecmd->add_option("--genus", t_genus, "crosscap number")->required();
    treecmd->add_option("--boundary", t_boundary, "boundary components")->required();
    treecmd->callback([&] {
        QuotientComplex x = complex_from_json(read_file(t_in));
        if (x.target.genus != t_genus || x.target.boundary != t_boundary)
            throw error(errc::mismatched_target,
                        "complex target is " + to_string(x.target));
        std::set<int> tree = build_maximal_tree(x);
        ClosureResult cl = determinability_closure(x, tree);
        std::cout << "vertices: " << x.vertices.size() << "\n";
        std::cout << "edges: " << x.edges.size() << "\n";
        std::cout << "tree edges: " << tree.size() << "\n";
        std::cout << "determinable edges: " << cl.determinable.size() << "\n";
        for (int e : cl.flagged_edges)
            std::cerr << "note: loop edge " << e << " paired with a distinct reversal\n";
        if (cl.covers_all(x)) {
            std::cout << "determinable: ALL (edges=" << x.edges.size()
                      << ", tree=" << tree.size() << ")\n";
        } else {
            std::cout << "determinable: PARTIAL (" << cl.determinable.size() << " of "
                      << x.edges.size() << ", tree=" << tree.size() << ")\n";
            rc = 3;
        }
    });

    // pres
    auto* pres = app.add_subcommand("pres", "presentation calculus");
    pres->require_subcommand(1);

    std::string ab_file;
    auto* abcmd = pres->add_subcommand("abelianize", "invariant factors");
    abcmd->add_option("file", ab_file, "presentation file")->required();
    abcmd->callback([&] {
        std::cout << to_string(abelianization(load_presentation(ab_file))) << "\n";
    });

    std::string rs_file, rs_signs;
    auto* rscmd = pres->add_subcommand("rs", "index-2 subgroup presentation");
    rscmd->add_option("file", rs_file, "presentation file")->required();
    rscmd->add_option("--sign", rs_signs, "comma list NAME=+1|-1 (at least one -1)")
        ->required();
    rscmd->callback([&] {
        RSResult r = reidemeister_schreier_index2(load_presentation(rs_file),
                                                  parse_signs(rs_signs));
        std::cout << format_presentation(r.subgroup);
        for (const auto& [name, word] : r.embedding)
            std::cout << "# " << name << " = " << format_word(word) << "\n";
    });

    std::string tc_file, tc_subgroup;
    long tc_max = 100000;
    auto* tccmd = pres->add_subcommand("tc", "coset enumeration");
    tccmd->add_option("file", tc_file, "presentation file")->required();
    tccmd->add_option("--subgroup", tc_subgroup, "generator words separated by ';'");
    tccmd->add_option("--max-cosets", tc_max, "coset table cap");
    tccmd->callback([&] {
        std::vector<Word> gens;
        for (const auto& piece : split(tc_subgroup, ';')) {
            Word w = parse_word(piece);
            if (!w.empty()) gens.push_back(std::move(w));
        }
        CosetResult r = todd_coxeter(load_presentation(tc_file), gens, tc_max);
        if (!r.completed) {
            std::cout << "OutOfBounds (cap " << tc_max << ", defined " << r.defined
                      << ")\n";
            rc = 2;
            return;
        }
        std::cout << "index: " << r.index << "\n";
        std::cout << "cosets defined: " << r.defined << "\n";
    });

    std::string asm_file;
    bool asm_reduce = false;
    auto* asmcmd = pres->add_subcommand("assemble", "presentation from a cell complex");
    asmcmd->add_option("file", asm_file, "cell complex json")->required();
    asmcmd->add_flag("--reduce", asm_reduce, "eliminate determinable edge generators");
    asmcmd->callback([&] {
        BrownResult r = brown_assembly(brown_from_json(read_file(asm_file)), asm_reduce);
        std::cout << format_presentation(r.pres);
        if (!r.complete) {
            std::cerr << "note: undetermined edges:";
            for (const auto& e : r.stuck) std::cerr << " " << e;
            std::cerr << "\n";
        }
    });

    // catalog
    auto* catalog = app.add_subcommand("catalog", "presentations of the small groups");
    catalog->require_subcommand(1);

    bool list_json = false;
    auto* listcmd = catalog->add_subcommand("list", "list entries");
    listcmd->add_flag("--json", list_json, "emit the json index");
    listcmd->callback([&] {
        if (list_json) {
            std::cout << catalog_index_json() << "\n";
            return;
        }
        for (const auto& e : catalog_entries()) {
            std::cout << e.id << "\t" << e.surface << "\tg=" << e.genus
                      << " n=" << e.boundary << "\t" << e.pres.generators.size()
                      << " gens, " << e.pres.relators.size() << " rels\t" << e.theorem
                      << "\n";
        }
    });

    std::string v_entry;
    auto* verifycmd = catalog->add_subcommand("verify", "run all catalog checks");
    verifycmd->add_option("--entry", v_entry, "restrict to one entry id");
    verifycmd->callback([&] {
        if (!v_entry.empty()) catalog_entry(v_entry); // validates the id
        CatalogReport report = verify_catalog();
        int pass = 0, unknown = 0, fail = 0;
        for (const auto& c : report.checks) {
            if (!v_entry.empty() && c.entry != v_entry) continue;
            switch (c.status) {
            case CheckStatus::pass: ++pass; break;
            case CheckStatus::unknown: ++unknown; break;
            default: ++fail; break;
            }
            std::cout << to_string(c.status) << "\t" << c.entry << "\t" << c.claim
                      << "\t" << c.detail << "\n";
        }
        std::cout << "checks: " << (pass + unknown + fail) << ", pass: " << pass
                  << ", unknown: " << unknown << ", fail: " << fail << "\n";
        if (fail > 0) rc = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::resource_limit ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
