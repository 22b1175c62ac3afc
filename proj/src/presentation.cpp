#include "ears/presentation.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

namespace ears {

std::string CoxeterOrder::str() const {
    switch (kind) {
    case Finite: return std::to_string(order);
    case Infinite: return "infinite";
    case Exceeded: return "> " + std::to_string(order);
    }
    return "?";
}

namespace {

void require_anisotropic(const AmbientSpace& sp, const RationalVector& a) {
    if (a.dim() != sp.dim()) throw DimensionMismatch("root " + a.str());
    if (sp.pair(a, a) == 0) throw IsotropicRoot(a.str());
}

} // namespace

CoxeterOrder coxeter_order(const AmbientSpace& space, const RationalVector& a, const RationalVector& b,
                           std::int64_t cap) {
    require_anisotropic(space, a);
    require_anisotropic(space, b);
    RationalMatrix p = reflection_matrix(space, a) * reflection_matrix(space, b);
    RationalMatrix id = RationalMatrix::identity(space.dim());
    RationalMatrix q = id;
    CoxeterOrder out;
    std::int64_t unip = 0;
    for (std::int64_t n = 1; n <= cap; ++n) {
        q = q * p;
        if (q == id) {
            out.order = n;
            return out;
        }
        if (!unip && is_nilpotent(q - id)) unip = n;
    }
    out.order = cap;
    if (unip) {
        out.kind = CoxeterOrder::Infinite;
        out.unipotent_power = unip;
    } else {
        out.kind = CoxeterOrder::Exceeded;
    }
    return out;
}

const std::vector<int>& twelve_letter_pattern() {
    static const std::vector<int> p{0, 1, 2, 0, 1, 2, 1, 0, 2, 1, 0, 2};
    return p;
}

CoxeterDecision coxeter_presentation_decision(const EarsDescriptor& r) {
    CoxeterDecision d;
    if (r.nullity() < 2) {
        d.reason = "nullity " + std::to_string(r.nullity()) + " < 2";
        return d;
    }
    const auto& sp = r.space();
    int fin = static_cast<int>(r.finite().simple().front());
    std::size_t nu = static_cast<std::size_t>(r.nullity());
    std::vector<RationalVector> sig;
    for (const auto& s : r.S().window(Q(2)))
        if (!s.is_zero()) sig.push_back(s);
    RationalVector a1 = r.vec(fin, RationalVector(nu));
    RationalMatrix id = RationalMatrix::identity(sp.dim());
    for (std::size_t i = 0; i < sig.size(); ++i)
        for (std::size_t j = i + 1; j < sig.size(); ++j) {
            if (rank(std::vector<RationalVector>{sig[i], sig[j]}) < 2) continue;
            std::vector<RationalVector> roots{a1, r.vec(fin, sig[i]), r.vec(fin, sig[j])};
            GeneratorWord w;
            for (int k : twelve_letter_pattern()) w.letters.push_back(roots[static_cast<std::size_t>(k)]);
            if (evaluate(w, sp).matrix != id) continue;
            d.coxeter = false;
            d.roots = roots;
            d.witness = w;
            d.witness_is_identity = true;
            d.witness_reduced = true;
            for (std::size_t k = 1; k < w.size(); ++k)
                if (w.letters[k] == w.letters[k - 1]) d.witness_reduced = false;
            d.reason = "nullity " + std::to_string(r.nullity()) +
                       " >= 2: the 12-letter word is the identity in W but not in the free product";
            return d;
        }
    // nullity >= 2 always has such a configuration; reaching here means the
    // search window was too small
    d.coxeter = false;
    d.reason = "nullity >= 2, no witness found in window 2";
    return d;
}

bool ParityVector::is_zero() const {
    for (const auto& [g, b] : bits)
        if (b) return false;
    return true;
}

int ParityVector::at(int group) const {
    auto it = bits.find(group);
    return it == bits.end() ? 0 : it->second;
}

std::string ParityVector::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [g, b] : bits) {
        os << (first ? "" : ", ") << g << ": " << b;
        first = false;
    }
    os << "}";
    return os.str();
}

ParityVector parity(const GeneratorWord& w, const EarsDescriptor& r, const OrbitTable& t) {
    ParityVector p;
    for (std::size_t g = 0; g < t.groups.size(); ++g) p.bits[static_cast<int>(g)] = 0;
    for (const auto& a : w.letters) {
        r.space().check_dim(a);
        RootKind k = is_root(r, a);
        if (k == RootKind::NotRoot) throw UnknownRoot(a.str());
        if (k == RootKind::Isotropic) throw IsotropicRoot(a.str());
        int id = t.orbit_of(r, a);
        if (id < 0) throw UnknownRoot(a.str());
        p.bits[t.orbits[static_cast<std::size_t>(id)].group] ^= 1;
    }
    return p;
}

ParityVector parity(const GeneratorWord& w, const EarsDescriptor& r) { return parity(w, r, root_orbits(r)); }

const char* ObstructionResult::kind_name() const {
    switch (kind) {
    case Obstruction: return "Obstruction";
    case NoneFound: return "NoneFound";
    case Inconclusive: return "Inconclusive";
    }
    return "?";
}

ObstructionResult conjugation_obstruction(const EarsDescriptor& r, const SearchOptions& opt) {
    ObstructionResult o;
    o.minimality = minimality(r, opt);
    o.evaluated = RationalMatrix::identity(r.space().dim());
    if (o.minimality.kind == MinimalityKind::Minimal) {
        o.kind = ObstructionResult::NoneFound;
        return o;
    }
    if (o.minimality.kind == MinimalityKind::Unknown) {
        o.kind = ObstructionResult::Inconclusive;
        return o;
    }
    const GenerationResult* c = o.minimality.certificate();
    // r_gamma times the reversed certificate is the identity
    o.word.letters.push_back(c->targets.front());
    o.word = o.word + c->certificates.front().reversed();
    o.evaluated = evaluate(o.word, r.space()).matrix;
    o.parity = parity(o.word, r, o.minimality.table);
    if (!o.evaluated.is_identity() || o.parity.is_zero())
        throw Error("obstruction word fails its own hypotheses");
    o.kind = ObstructionResult::Obstruction;
    return o;
}

namespace {

struct Rewriter {
    const AmbientSpace& sp;
    const std::function<bool(const RationalVector&)>& preferred;
    std::set<std::vector<RationalVector>> seen;
    std::size_t budget = 200000;
    RewriteResult best;
    std::size_t best_outside = SIZE_MAX;

    std::size_t outside(const std::vector<RationalVector>& ls) const {
        return static_cast<std::size_t>(std::count_if(ls.begin(), ls.end(), [&](const auto& a) { return !preferred(a); }));
    }

    void consider(const std::vector<RationalVector>& ls, const std::vector<std::string>& log) {
        std::size_t n = outside(ls);
        if (n < best_outside || (n == best_outside && ls.size() < best.word.size())) {
            best_outside = n;
            best = RewriteResult{GeneratorWord{ls}, log};
        }
    }

    // Leftmost outside letter with a dependent letter to its right is moved
    // next to each such partner in turn and cancelled.
    void run(const std::vector<RationalVector>& ls, std::vector<std::string>& log) {
        if (best_outside == 0 || !budget || !seen.insert(ls).second) return;
        --budget;
        consider(ls, log);
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (preferred(ls[i])) continue;
            bool any = false;
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                if (!dependent(ls[i], ls[j])) continue;
                any = true;
                std::vector<RationalVector> next(ls);
                std::size_t mark = log.size();
                for (std::size_t k = i + 1; k < j; ++k) {
                    RationalVector y = reflect(sp, ls[i], ls[k]);
                    log.push_back("swap " + ls[i].str() + " past " + ls[k].str() + " -> " + y.str());
                    next[k - 1] = y;
                }
                log.push_back("cancel " + ls[i].str() + " with " + ls[j].str());
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(j - 1));
                run(next, log);
                log.resize(mark);
                if (best_outside == 0) return;
            }
            if (any) return;
        }
    }
};

} // namespace

RewriteResult conjugation_rewrite(const GeneratorWord& w, const EarsDescriptor& r,
                                  const std::function<bool(const RationalVector&)>& preferred) {
    const auto& sp = r.space();
    for (const auto& a : w.letters) require_anisotropic(sp, a);
    if (!evaluate(w, sp).matrix.is_identity()) throw NotARelation(w.str() + " does not evaluate to 1");
    Rewriter rw{sp, preferred, {}, 200000, {}, SIZE_MAX};
    std::vector<std::string> log;
    rw.run(w.letters, log);
    return rw.best;
}

} // namespace ears
