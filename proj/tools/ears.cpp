#include "ears/error.hpp"
#include "ears/fixtures.hpp"
#include "ears/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace ears;

namespace {

enum Exit { Pass = 0, Failure = 1, Constraint = 2, Parse = 3 };

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::string root;
    std::int64_t window_bound = 4;
    int search_depth = 8;
    std::size_t budget = 1000000;
    bool extract = false;
};

void emit(const RunConfig& c, const Json& j) {
    std::string text = dump(j);
    if (c.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output_path);
    if (!out) throw Error("cannot write " + c.output_path);
    out << text;
}

EarsDescriptor load(const RunConfig& c) {
    if (c.input_path.empty()) throw ParseError("--in is required");
    return descriptor_from_json(read_json_file(c.input_path));
}

RationalVector parse_root(const std::string& s) {
    std::vector<Q> xs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) xs.push_back(parse_rational(tok));
    if (xs.empty()) throw ParseError("empty root");
    return RationalVector(xs);
}

SearchOptions search(const RunConfig& c) { return SearchOptions{c.search_depth, c.budget}; }

int cmd_construct(const RunConfig& c) {
    emit(c, descriptor_to_json(load(c)));
    return Pass;
}

int cmd_verify(const RunConfig& c) {
    EarsDescriptor r = load(c);
    AxiomReport a = verify_axioms(r, c.window_bound);
    emit(c, to_json(a));
    return a.pass() ? Pass : Failure;
}

int cmd_orbits(const RunConfig& c) {
    EarsDescriptor r = load(c);
    if (c.root.empty()) {
        emit(c, to_json(root_orbits(r)));
        return Pass;
    }
    RationalVector a = parse_root(c.root);
    if (is_root(r, a) == RootKind::NotRoot) throw UnknownRoot(a.str());
    OrbitDescriptor o = orbit_closed_form(r, a);
    Json j = to_json(o);
    auto bfs = orbit_bfs(r, a, c.window_bound);
    std::size_t agree = 0;
    bool ok = true;
    for (const auto& v : root_window(r, Q(c.window_bound))) {
        bool in_bfs = std::binary_search(bfs.begin(), bfs.end(), v);
        if (in_bfs != o.contains(r, v)) ok = false;
        agree += in_bfs;
    }
    j["window"] = c.window_bound;
    j["window_members"] = agree;
    j["bfs_agrees"] = ok;
    emit(c, j);
    return ok ? Pass : Failure;
}

int cmd_minimality(const RunConfig& c) {
    EarsDescriptor r = load(c);
    MinimalityResult m = minimality(r, search(c));
    Json j = to_json(m);
    if (c.extract) {
        try {
            j["extraction"] = to_json(extract_minimal(r, search(c)));
        } catch (const Stuck& e) {
            j["extraction"] = {{"stuck", e.what()}};
        }
    }
    emit(c, j);
    return Pass;
}

int cmd_presentation(const RunConfig& c) {
    EarsDescriptor r = load(c);
    Json j;
    j["coxeter"] = to_json(coxeter_presentation_decision(r));
    j["conjugation"] = to_json(conjugation_obstruction(r, search(c)));
    emit(c, j);
    return Pass;
}

int cmd_trim(const RunConfig& c) {
    EarsDescriptor r = load(c);
    TrimResult t = trim_report(r);
    Json j = to_json(t);
    bool same = trim_same_reflections(r, t.trimmed, c.window_bound);
    j["same_reflections_on_window"] = same;
    emit(c, j);
    return same && t.s_prime_report.pass() ? Pass : Failure;
}

int cmd_irc(const RunConfig& c) {
    EarsDescriptor r = load(c);
    Q b(c.window_bound);
    // pad the window so that differences reaching back into it are seen
    auto closed = irc(anisotropic_window(r, Q(2 * c.window_bound)), r.space());
    std::vector<RationalVector> cut;
    for (const auto& v : closed) {
        bool inside = true;
        RationalVector z = r.space().v0_part(v);
        for (const auto& x : z.coords())
            if (abs(x) > b) inside = false;
        if (inside) cut.push_back(v);
    }
    std::sort(cut.begin(), cut.end());
    auto expect = root_window(r, b);
    CosetSet iso = irc_isotropic(r);
    bool ok = cut == expect && iso == r.isotropic();
    Json roots = Json::array();
    for (const auto& v : cut) roots.push_back(to_json(v));
    emit(c, {{"window", c.window_bound},
             {"isotropic", to_json(iso)},
             {"matches_descriptor", ok},
             {"roots", roots}});
    return ok ? Pass : Failure;
}

int cmd_paper_examples(const RunConfig& c) {
    auto checks = golden_checks();
    Json a = Json::array();
    bool ok = true;
    for (const auto& g : checks) {
        Json o{{"fixture", g.fixture}, {"check", g.name}, {"pass", g.pass}};
        if (!g.pass) {
            o["expected"] = g.expected;
            o["actual"] = g.actual;
            ok = false;
        }
        a.push_back(o);
    }
    emit(c, {{"pass", ok}, {"checks", a}});
    if (!ok) {
        for (const auto& g : checks)
            if (!g.pass)
                std::cerr << "GoldenMismatch: " << g.fixture << ": " << g.name << "\n--- expected\n"
                          << g.expected << "\n+++ actual\n"
                          << g.actual << "\n";
        return Failure;
    }
    return Pass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extended affine root systems and their Weyl groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* s, bool input) {
        if (input) s->add_option("--in", cfg.input_path, "descriptor or config JSON")->required();
        s->add_option("--out", cfg.output_path, "report path (default stdout)");
        s->add_option("--window", cfg.window_bound, "coordinate window bound")->check(CLI::PositiveNumber);
        s->add_option("--depth", cfg.search_depth, "certificate word length bound")->check(CLI::PositiveNumber);
        s->add_option("--budget", cfg.budget, "element budget of the certificate search")->check(CLI::PositiveNumber);
    };
    std::map<std::string, int (*)(const RunConfig&)> handlers{
        {"construct", cmd_construct},   {"verify", cmd_verify}, {"orbits", cmd_orbits},
        {"minimality", cmd_minimality}, {"presentation", cmd_presentation},
        {"trim", cmd_trim},             {"irc", cmd_irc},       {"paper-examples", cmd_paper_examples}};
    const std::map<std::string, std::string> help{
        {"construct", "build a descriptor from semilattice data"},
        {"verify", "check the axioms on a window"},
        {"orbits", "orbit table, or the orbit of --root"},
        {"minimality", "decide minimality with certificates"},
        {"presentation", "Coxeter and conjugation presentation checks"},
        {"trim", "trim a BC descriptor"},
        {"irc", "isotropic root closure of the anisotropic window"},
        {"paper-examples", "reproduce the built-in worked examples"}};
    for (const auto& [name, fn] : handlers) {
        CLI::App* s = app.add_subcommand(name, help.at(name));
        common(s, name != "paper-examples");
        if (name == "orbits") s->add_option("--root", cfg.root, "comma-separated coordinates");
        if (name == "minimality") s->add_flag("--extract", cfg.extract, "also extract a minimal sub-EARS");
        s->callback([&cfg, name = name]() { cfg.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Pass : Parse;
    }
    try {
        return handlers.at(cfg.command)(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Parse;
    } catch (const Stuck& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    } catch (const GoldenMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Constraint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    }
}
