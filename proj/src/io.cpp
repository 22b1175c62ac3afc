#include "ears/io.hpp"

#include "ears/error.hpp"

#include <fstream>
#include <sstream>

namespace ears {

Json to_json(const Q& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Json to_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& x : v.coords()) a.push_back(to_json(x));
    return a;
}

Json to_json(const RationalMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const Lattice& l) {
    Json a = Json::array();
    for (const auto& b : l.basis()) a.push_back(to_json(b));
    return a;
}

Json to_json(const CosetSet& c) {
    Json a = Json::array();
    for (const auto& r : c.reps()) a.push_back(to_json(r));
    return {{"modulus", to_json(c.modulus())}, {"cosets", a}};
}

Json to_json(const GeneratorWord& w) {
    Json a = Json::array();
    for (const auto& l : w.letters) a.push_back(to_json(l));
    return a;
}

Json to_json(const ParityVector& p) {
    Json o = Json::object();
    for (const auto& [g, b] : p.bits) o[std::to_string(g)] = b;
    return o;
}

Q rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

RationalVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
    RationalVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
    return v;
}

namespace {

std::vector<RationalVector> vectors(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of vectors");
    std::vector<RationalVector> out;
    for (const auto& x : j) out.push_back(vector_from_json(x));
    return out;
}

SemilatticeData semilattice_from_json(const Json& j, std::size_t nu, bool translated_default) {
    const char* key = j.is_object() && j.contains("lattice") ? "lattice" : "basis";
    if (!j.is_object() || !j.contains(key) || !j.contains("cosets"))
        throw ParseError("semilattice needs \"lattice\" and \"cosets\"");
    bool translated = j.value("translated", translated_default);
    auto basis = vectors(j.at(key), key);
    auto cosets = vectors(j.at("cosets"), "cosets");
    for (const auto& v : basis)
        if (v.dim() != nu) throw RankMismatch("basis vector " + v.str() + " has dimension " + std::to_string(v.dim()));
    for (const auto& v : cosets)
        if (v.dim() != nu) throw RankMismatch("coset " + v.str() + " has dimension " + std::to_string(v.dim()));
    return SemilatticeData::make(nu, basis, cosets, translated);
}

Json semilattice_json(const SemilatticeData& s) {
    // S = cosets + 2 * lattice
    Json basis = Json::array(), cosets = Json::array();
    for (const auto& b : s.set().modulus().basis()) basis.push_back(to_json(b * Q(1, 2)));
    for (const auto& c : s.cosets()) cosets.push_back(to_json(c));
    return {{"lattice", basis}, {"cosets", cosets}, {"translated", s.translated()}, {"is_lattice", s.is_lattice()}};
}

Json witness_json(const std::vector<RationalVector>& w) {
    Json a = Json::array();
    for (const auto& v : w) a.push_back(to_json(v));
    return a;
}

} // namespace

EarsDescriptor descriptor_from_json(const Json& j) {
    try {
        if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
        if (!j.contains("type") || !j.contains("nullity") || !j.contains("S"))
            throw ParseError("descriptor needs \"type\", \"nullity\" and \"S\"");
        TypeSymbol t = TypeSymbol::parse(j.at("type").get<std::string>());
        if (j.contains("rank") && j.at("rank").get<int>() != t.rank)
            throw RankMismatch("rank " + j.at("rank").dump() + " does not match type " + t.str());
        int nu = j.at("nullity").get<int>();
        if (nu < 0) throw ParseError("negative nullity");
        auto n = static_cast<std::size_t>(nu);
        SemilatticeData s = semilattice_from_json(j.at("S"), n, false);
        std::optional<SemilatticeData> l, e;
        if (j.contains("L")) l = semilattice_from_json(j.at("L"), n, false);
        if (j.contains("E")) e = semilattice_from_json(j.at("E"), n, true);
        return construct_ears(t, nu, s, l, e);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(ex.what());
    }
}

Json descriptor_to_json(const EarsDescriptor& r) {
    Json j;
    j["type"] = r.type().str();
    j["rank"] = r.ell();
    j["nullity"] = r.nullity();
    j["S"] = semilattice_json(r.S());
    if (r.L()) j["L"] = semilattice_json(*r.L());
    if (r.E()) j["E"] = semilattice_json(*r.E());
    j["ambient_dim"] = r.space().dim();
    j["gram"] = to_json(r.space().form().gram());
    j["isotropic"] = to_json(r.isotropic());
    return j;
}

Json to_json(const AxiomReport& a) {
    Json res = Json::array();
    for (const auto& x : a.results) {
        Json o{{"axiom", x.axiom}, {"pass", x.pass}, {"checked", x.checked}};
        if (!x.detail.empty()) o["detail"] = x.detail;
        if (!x.witness.empty()) o["witness"] = witness_json(x.witness);
        res.push_back(o);
    }
    return {{"pass", a.pass()}, {"caveat", a.caveat()}, {"results", res}};
}

Json to_json(const OrbitDescriptor& o) {
    Json j{{"base", to_json(o.base)}, {"offset", to_json(o.offset)}, {"translation_lattice", to_json(o.translation)}};
    if (o.fin >= 0) {
        j["class"] = class_name(o.cls);
        j["finite_orbit_size"] = o.finite_orbit.size();
    }
    j["description"] = o.str();
    return j;
}

Json to_json(const OrbitTable& t) {
    Json a = Json::array();
    for (const auto& o : t.orbits)
        a.push_back({{"id", o.id},
                     {"class", class_name(o.cls)},
                     {"coset", to_json(o.coset)},
                     {"representative", to_json(o.rep)},
                     {"min_norm2", to_json(o.min_norm2)},
                     {"group", o.group}});
    Json g = Json::array();
    for (const auto& grp : t.groups) g.push_back(grp);
    return {{"orbits", a}, {"groups", g}};
}

Json to_json(const GenerationResult& g) {
    Json j{{"group", g.group}, {"verdict", verdict_name(g.verdict)}, {"reason", g.reason}};
    Json t = Json::array();
    for (const auto& v : g.targets) t.push_back(to_json(v));
    j["targets"] = t;
    if (!g.certificates.empty()) {
        Json c = Json::array();
        for (const auto& w : g.certificates) c.push_back(to_json(w));
        j["certificates"] = c;
    }
    return j;
}

Json to_json(const MinimalityResult& m) {
    Json j{{"verdict", minimality_name(m.kind)}};
    j["orbits"] = to_json(m.table);
    Json checks = Json::array();
    for (const auto& c : m.checks) checks.push_back(to_json(c));
    j["checks"] = checks;
    if (m.removable_group >= 0) j["removable_group"] = m.removable_group;
    if (!m.unresolved.empty()) j["unresolved"] = m.unresolved;
    return j;
}

Json to_json(const ExtractionResult& e) {
    Json chain = Json::array();
    for (const auto& s : e.chain) {
        Json rem = Json::array();
        for (const auto& v : s.removed) rem.push_back(to_json(v));
        chain.push_back({{"from", s.from.str()}, {"to", s.to.str()}, {"removed", rem}, {"check", to_json(s.check)}});
    }
    return {{"chain", chain}, {"result", descriptor_to_json(e.result)}};
}

Json to_json(const CoxeterDecision& d) {
    Json j{{"coxeter_presentation", d.coxeter ? "Yes" : "No"}, {"reason", d.reason}};
    if (!d.coxeter && !d.roots.empty()) {
        j["roots"] = witness_json(d.roots);
        j["witness"] = to_json(d.witness);
        j["witness_is_identity"] = d.witness_is_identity;
        j["witness_reduced"] = d.witness_reduced;
    }
    return j;
}

Json to_json(const ObstructionResult& o) {
    Json j{{"status", o.kind_name()}};
    if (o.kind == ObstructionResult::Obstruction) {
        j["word"] = to_json(o.word);
        j["parity"] = to_json(o.parity);
        j["evaluated"] = to_json(o.evaluated);
    }
    j["minimality"] = to_json(o.minimality);
    return j;
}

Json to_json(const TrimResult& t) {
    return {{"trimmed", descriptor_to_json(t.trimmed)},
            {"s_prime", to_json(t.s_prime)},
            {"s_prime_semilattice", t.s_prime_report.pass()},
            {"s_prime_plus_2s_prime_in_s_prime", t.s_prime_closed},
            {"l_plus_2s_prime_in_l", t.l_plus_2s_prime},
            {"s_prime_plus_l_in_s_prime", t.s_prime_plus_l}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ears
