#include "ears/generation.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ears {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Generates: return "Generates";
    case Verdict::NotGenerates: return "NotGenerates";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* minimality_name(MinimalityKind k) {
    switch (k) {
    case MinimalityKind::Minimal: return "Minimal";
    case MinimalityKind::NotMinimal: return "NotMinimal";
    case MinimalityKind::Unknown: return "Unknown";
    }
    return "?";
}

const GenerationResult* MinimalityResult::certificate() const {
    for (const auto& c : checks)
        if (c.verdict == Verdict::Generates) return &c;
    return nullptr;
}

namespace {

using Mat = std::vector<std::int64_t>;

struct Key {
    std::uint64_t a = 0, b = 0;
    bool operator==(const Key& o) const { return a == o.a && b == o.b; }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const { return static_cast<std::size_t>(k.a ^ (k.b * 0x9e3779b97f4a7c15ULL)); }
};

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Key key_of(const Mat& m) {
    Key k{0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL};
    for (auto x : m) {
        auto u = static_cast<std::uint64_t>(x);
        k.a = mix(k.a ^ u);
        k.b = mix(k.b + u * 0xff51afd7ed558ccdULL);
    }
    return k;
}

// false on overflow
bool mul(const Mat& x, const Mat& y, std::size_t n, Mat& out) {
    out.assign(n * n, 0);
    const __int128 lim = static_cast<__int128>(1) << 62;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            __int128 s = 0;
            for (std::size_t k = 0; k < n; ++k) s += static_cast<__int128>(x[i * n + k]) * y[k * n + j];
            if (s >= lim || s <= -lim) return false;
            out[i * n + j] = static_cast<std::int64_t>(s);
        }
    return true;
}

Mat to_int(const RationalMatrix& m) {
    Mat out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw Error("non-integral reflection after scaling");
            out[i * m.cols() + j] = checked::from_mpz(m(i, j).get_num());
        }
    return out;
}

// Class sets of R with the cosets of the removed orbits taken out.
struct Reduced {
    std::array<std::optional<CosetSet>, 3> full, rest;
    std::array<const CosetSet*, 3> ptr() const {
        std::array<const CosetSet*, 3> p{};
        for (int c = 0; c < 3; ++c)
            if (rest[c]) p[c] = &*rest[c];
        return p;
    }
};

Reduced reduce(const EarsDescriptor& r, const OrbitTable& t, int group) {
    Reduced out;
    for (int c = 0; c < 3; ++c)
        if (const SemilatticeData* x = r.class_set(c)) {
            out.full[c] = x->set();
            out.rest[c] = x->set();
        }
    for (int id : t.groups[static_cast<std::size_t>(group)]) {
        const RootOrbit& o = t.orbits[static_cast<std::size_t>(id)];
        out.rest[o.cls] = out.rest[o.cls]->minus(o.coset);
    }
    return out;
}

// Smallest D such that D*tau and 4*D*tau/|beta|^2 (doubled norms) are
// integral for every tau in every class set.
std::int64_t scaling(const EarsDescriptor& r, const Reduced& x) {
    std::int64_t d = 1;
    const auto& f = r.finite();
    for (int c = 0; c < 3; ++c) {
        if (!x.full[c] || !f.has_class(c)) continue;
        std::int64_t n2 = f.norm2(f.roots()[f.class_members(c).front()]);
        std::vector<RationalVector> vs = x.full[c]->reps();
        for (const auto& b : x.full[c]->modulus().basis()) vs.push_back(b);
        for (const auto& v : vs) {
            d = checked::lcm(d, denominator_of(v));
            d = checked::lcm(d, denominator_of(v * (Q(4) / Q(n2))));
        }
    }
    return d;
}

struct Letter {
    int fin;
    RationalVector sigma; // unscaled
};

RationalVector letter_vec(const EarsDescriptor& r, const Letter& l, std::int64_t d) {
    return r.vec(l.fin, l.sigma * Q(d));
}

std::vector<std::size_t> positive_of(const FiniteRootSystem& f, int c) {
    std::vector<std::size_t> out;
    for (auto i : f.class_members(c))
        if (f.is_positive(i)) out.push_back(i);
    return out;
}

std::string lattice_reason(int c, const Lattice& t, const Lattice& tt) {
    std::ostringstream os;
    os << "translations of class " << class_name(c) << " shrink: T = " << t.str() << ", reduced " << tt.str();
    return os.str();
}

// Image of the remaining reflections in GL(V mod N) after D-scaling. Returns a
// message if some r_target is provably outside; nullopt if undecided or inside.
std::optional<std::string> congruence_refutes(const EarsDescriptor& r, const Reduced& x, std::int64_t d,
                                              const std::vector<RationalVector>& targets, int modn,
                                              std::size_t budget) {
    const auto& f = r.finite();
    const auto& sp = r.space();
    std::size_t n = sp.dim();
    std::size_t nu = static_cast<std::size_t>(r.nullity());
    using Small = std::vector<std::uint8_t>;
    auto reduce_mat = [&](const Mat& m) {
        Small s(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) s[i] = static_cast<std::uint8_t>(((m[i] % modn) + modn) % modn);
        return s;
    };
    std::set<Small> gens;
    for (int c = 0; c < 3; ++c) {
        if (!x.rest[c] || x.rest[c]->is_empty() || !f.has_class(c)) continue;
        std::int64_t q2 = f.norm2(f.roots()[f.class_members(c).front()]);
        std::int64_t m = modn * q2; // covers modn * |beta|^2 / 2
        Lattice box = Lattice::standard(nu, Q(m));
        CosetSet res = x.rest[c]->scaled(Q(d)).plus(box).refined(box);
        if (res.num_reps() * positive_of(f, c).size() > budget) return std::nullopt;
        for (const auto& tau : res.reps())
            for (auto i : positive_of(f, c))
                gens.insert(reduce_mat(to_int(reflection_matrix(sp, r.vec(static_cast<int>(i), tau)))));
    }
    std::vector<Small> gl(gens.begin(), gens.end());
    std::vector<Small> want;
    for (const auto& t : targets) {
        RationalVector ts = concat(concat(sp.v0_part(t) * Q(d), sp.dot_part(t)), sp.dual_part(t));
        want.push_back(reduce_mat(to_int(reflection_matrix(sp, ts))));
    }
    Small id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::set<Small> seen{id};
    std::deque<Small> q{id};
    std::size_t work = 0;
    Small y(n * n);
    while (!q.empty()) {
        Small a = q.front();
        q.pop_front();
        for (const auto& g : gl) {
            if (++work > budget) return std::nullopt;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    int s = 0;
                    for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * g[k * n + j];
                    y[i * n + j] = static_cast<std::uint8_t>(s % modn);
                }
            if (seen.insert(y).second) q.push_back(y);
        }
    }
    for (std::size_t i = 0; i < want.size(); ++i)
        if (!seen.count(want[i])) {
            std::ostringstream os;
            os << "mod " << modn << " the remaining reflections generate a group of order " << seen.size()
               << " not containing r of " << targets[i].str();
            return os.str();
        }
    return std::nullopt;
}

struct Entry {
    std::int32_t parent;
    std::int32_t gen;
    std::int32_t len;
};

std::vector<int> word_of(const std::vector<Entry>& e, int i) {
    std::vector<int> w;
    while (i > 0) {
        w.push_back(e[static_cast<std::size_t>(i)].gen);
        i = e[static_cast<std::size_t>(i)].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

// Meet in the middle over int64 matrices (scaled coordinates).
std::optional<std::vector<int>> mitm(const std::vector<Mat>& gens, const Mat& target, std::size_t n, int depth,
                                     std::size_t budget) {
    int half = (depth + 1) / 2;
    Mat id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::vector<Entry> entries{{-1, -1, 0}};
    std::unordered_map<Key, std::int32_t, KeyHash> index{{key_of(id), 0}};
    std::vector<std::pair<std::size_t, std::size_t>> levels{{0, 1}};
    std::vector<Mat> frontier{id};
    Mat p;
    for (int l = 1; l <= half && entries.size() < budget; ++l) {
        std::size_t begin = entries.size();
        std::vector<Mat> next;
        for (std::size_t k = 0; k < frontier.size() && entries.size() < budget; ++k)
            for (std::size_t g = 0; g < gens.size() && entries.size() < budget; ++g) {
                if (!mul(frontier[k], gens[g], n, p)) continue;
                Key key = key_of(p);
                if (index.count(key)) continue;
                index.emplace(key, static_cast<std::int32_t>(entries.size()));
                entries.push_back({static_cast<std::int32_t>(levels.back().first + k), static_cast<std::int32_t>(g), l});
                next.push_back(p);
            }
        levels.emplace_back(begin, entries.size());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::optional<std::vector<int>> best;
    auto consider = [&](std::size_t e, const Mat& u) {
        Mat pt;
        if (!mul(u, target, n, pt)) return;
        auto it = index.find(key_of(pt));
        if (it == index.end()) return;
        int f = it->second;
        if (entries[e].len + entries[static_cast<std::size_t>(f)].len > depth) return;
        std::vector<int> w = word_of(entries, static_cast<int>(e));
        std::reverse(w.begin(), w.end());
        std::vector<int> w2 = word_of(entries, f);
        w.insert(w.end(), w2.begin(), w2.end());
        if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = w;
    };
    // regenerate level by level, keeping one level of matrices
    std::vector<Mat> prev{id};
    consider(0, id);
    for (std::size_t l = 1; l < levels.size(); ++l) {
        auto [b, e] = levels[l];
        std::vector<Mat> cur;
        cur.reserve(e - b);
        for (std::size_t i = b; i < e; ++i) {
            const Entry& en = entries[i];
            Mat u;
            mul(prev[static_cast<std::size_t>(en.parent) - levels[l - 1].first], gens[static_cast<std::size_t>(en.gen)], n, u);
            consider(i, u);
            cur.push_back(std::move(u));
        }
        prev = std::move(cur);
    }
    return best;
}

std::vector<Letter> letters_within(const EarsDescriptor& r, const Reduced& x, std::int64_t radius) {
    const auto& f = r.finite();
    std::vector<Letter> out;
    for (int c = 0; c < 3; ++c) {
        if (!x.rest[c] || x.rest[c]->is_empty() || !f.has_class(c)) continue;
        for (const auto& tau : x.rest[c]->window(Q(radius)))
            for (auto i : positive_of(f, c)) out.push_back({static_cast<int>(i), tau});
    }
    std::sort(out.begin(), out.end(), [](const Letter& a, const Letter& b) {
        return a.sigma != b.sigma ? a.sigma < b.sigma : a.fin < b.fin;
    });
    return out;
}

std::optional<GeneratorWord> search(const EarsDescriptor& r, const std::vector<Letter>& letters, std::int64_t d,
                                    const RationalVector& target, const SearchOptions& opt) {
    const auto& sp = r.space();
    std::size_t n = sp.dim();
    std::vector<Mat> gens;
    for (const auto& l : letters) gens.push_back(to_int(reflection_matrix(sp, letter_vec(r, l, d))));
    RationalVector ts = concat(concat(sp.v0_part(target) * Q(d), sp.dot_part(target)), sp.dual_part(target));
    auto w = mitm(gens, to_int(reflection_matrix(sp, ts)), n, opt.depth, opt.budget);
    if (!w) return std::nullopt;
    GeneratorWord word;
    for (int g : *w) word.letters.push_back(r.vec(letters[static_cast<std::size_t>(g)].fin, letters[static_cast<std::size_t>(g)].sigma));
    // exact re-check; a hash collision would end up here
    if (evaluate(word, sp).matrix != reflection_matrix(sp, target)) return std::nullopt;
    return word;
}

} // namespace

std::optional<GeneratorWord> find_certificate(const EarsDescriptor& r, const std::vector<RationalVector>& letters,
                                              const RationalVector& target, const SearchOptions& opt) {
    const auto& sp = r.space();
    std::vector<Letter> ls;
    Reduced x;
    for (int c = 0; c < 3; ++c)
        if (const SemilatticeData* s = r.class_set(c)) x.full[c] = s->set();
    std::int64_t d = scaling(r, x);
    for (const auto& v : letters) {
        auto w = r.locate(v);
        if (!w || w->fin < 0 || !r.contains_struct(w->fin, w->sig)) throw UnknownRoot(v.str());
        ls.push_back({w->fin, sp.v0_part(v)});
    }
    auto t = r.locate(target);
    if (!t || t->fin < 0 || !r.contains_struct(t->fin, t->sig)) throw UnknownRoot(target.str());
    return search(r, ls, d, target, opt);
}

GenerationResult generation_check(const EarsDescriptor& r, const OrbitTable& table, int group,
                                  const SearchOptions& opt) {
    if (group < 0 || static_cast<std::size_t>(group) >= table.groups.size())
        throw NotAnOrbit("no orbit group " + std::to_string(group));
    const auto& f = r.finite();
    GenerationResult res;
    res.group = group;
    for (int id : table.groups[static_cast<std::size_t>(group)])
        res.targets.push_back(table.orbits[static_cast<std::size_t>(id)].rep);
    Reduced x = reduce(r, table, group);

    std::vector<IntVec> fin_left;
    for (int c = 0; c < 3; ++c)
        if (x.rest[c] && !x.rest[c]->is_empty())
            for (auto i : f.class_members(c)) fin_left.push_back(f.roots()[i]);
    if (!reflections_generate(f, fin_left)) {
        res.verdict = Verdict::NotGenerates;
        res.reason = "finite parts of the remaining roots generate a proper subgroup of the finite Weyl group";
        return res;
    }
    std::size_t nu = static_cast<std::size_t>(r.nullity());
    for (int c = 0; c < 3; ++c) {
        if (!x.full[c] || !f.has_class(c)) continue;
        Lattice t = translation_lattice(r, c);
        Lattice tt = translation_lattice(f, c, x.ptr(), nu);
        if (t != tt) {
            res.verdict = Verdict::NotGenerates;
            res.reason = lattice_reason(c, t, tt);
            return res;
        }
    }
    std::int64_t d = scaling(r, x);
    for (int modn : {4, 8})
        if (auto why = congruence_refutes(r, x, d, res.targets, modn, opt.budget)) {
            res.verdict = Verdict::NotGenerates;
            res.reason = *why;
            return res;
        }

    // W' acts transitively on each removed orbit when the differences of the
    // remaining class sets already produce all of T
    for (int id : table.groups[static_cast<std::size_t>(group)]) {
        int c = table.orbits[static_cast<std::size_t>(id)].cls;
        Lattice dl = Lattice::zero(nu);
        for (int c2 = 0; c2 < 3; ++c2) {
            if (!x.rest[c2] || x.rest[c2]->is_empty() || !f.has_class(c2)) continue;
            std::int64_t g = class_gcd(f, c, c2);
            if (g) dl = dl + x.rest[c2]->plus(x.rest[c2]->negate()).generated().scaled(Q(g));
        }
        if (dl != translation_lattice(r, c)) {
            res.verdict = Verdict::Inconclusive;
            res.reason = "remaining differences do not span T for class " + std::string(class_name(c));
            return res;
        }
    }
    for (std::int64_t radius : {1, 2}) {
        std::vector<Letter> letters = letters_within(r, x, radius);
        std::vector<GeneratorWord> certs;
        for (const auto& t : res.targets) {
            auto w = search(r, letters, d, t, opt);
            if (!w) break;
            certs.push_back(*w);
        }
        if (certs.size() == res.targets.size()) {
            res.verdict = Verdict::Generates;
            res.certificates = std::move(certs);
            res.reason = "certificate found with generators of |sigma| <= " + std::to_string(radius);
            return res;
        }
    }
    res.verdict = Verdict::Inconclusive;
    res.reason = "no word of length <= " + std::to_string(opt.depth) + " within budget " + std::to_string(opt.budget);
    return res;
}

GenerationResult generation_check(const EarsDescriptor& r, const OrbitDescriptor& removed, const SearchOptions& opt) {
    OrbitTable t = root_orbits(r);
    int id = t.orbit_of(r, removed.base);
    if (id < 0) throw NotAnOrbit(removed.base.str() + " is not an anisotropic root");
    return generation_check(r, t, t.orbits[static_cast<std::size_t>(id)].group, opt);
}

MinimalityResult minimality(const EarsDescriptor& r, const SearchOptions& opt) {
    MinimalityResult m;
    m.table = root_orbits(r);
    for (std::size_t g = 0; g < m.table.groups.size(); ++g) {
        m.checks.push_back(generation_check(r, m.table, static_cast<int>(g), opt));
        const auto& c = m.checks.back();
        if (c.verdict == Verdict::Generates) {
            m.kind = MinimalityKind::NotMinimal;
            m.removable_group = static_cast<int>(g);
            return m;
        }
        if (c.verdict == Verdict::Inconclusive) m.unresolved.push_back(static_cast<int>(g));
    }
    m.kind = m.unresolved.empty() ? MinimalityKind::Minimal : MinimalityKind::Unknown;
    return m;
}

bool allowed_type_change(const TypeSymbol& from, const TypeSymbol& to) {
    if (from == to) return true;
    if (from.family != Family::BC) return false;
    if (from.rank == 1) return to == TypeSymbol{Family::A, 1};
    return to.rank == from.rank && (to.family == Family::B || to.family == Family::C);
}

ExtractionResult extract_minimal(const EarsDescriptor& r, const SearchOptions& opt) {
    ExtractionResult out{r, {}};
    for (;;) {
        const EarsDescriptor& cur = out.result;
        MinimalityResult m = minimality(cur, opt);
        if (m.kind == MinimalityKind::Minimal) return out;
        if (m.kind == MinimalityKind::Unknown) {
            std::ostringstream os;
            os << "generation undecided for orbit groups";
            for (int g : m.unresolved) os << " " << g;
            throw Stuck(os.str());
        }
        const GenerationResult& cert = m.checks.back();
        Reduced x = reduce(cur, m.table, m.removable_group);
        std::size_t nu = static_cast<std::size_t>(cur.nullity());
        RationalVector zero(nu);
        for (int c : {Sh, Lg})
            if (x.rest[c] && !x.rest[c]->is_empty() && !x.rest[c]->contains(zero))
                throw Stuck("removing orbit group " + std::to_string(m.removable_group) +
                            " leaves a " + class_name(c) + " set without 0; this requires re-basing");
        if (!x.rest[Sh] || x.rest[Sh]->is_empty())
            throw Stuck("removing orbit group " + std::to_string(m.removable_group) +
                        " empties the short roots; this requires re-basing");
        TypeSymbol to = cur.type();
        std::optional<SemilatticeData> s = SemilatticeData::from_set(*x.rest[Sh]), l, e;
        if (x.rest[Lg] && !x.rest[Lg]->is_empty()) l = SemilatticeData::from_set(*x.rest[Lg]);
        if (x.rest[Ex] && !x.rest[Ex]->is_empty()) e = SemilatticeData::from_set(*x.rest[Ex], true);
        if (cur.type().family == Family::BC && !e)
            to = cur.type().rank == 1 ? TypeSymbol{Family::A, 1} : TypeSymbol{Family::B, cur.type().rank};
        EarsDescriptor next;
        try {
            next = construct_ears(to, cur.nullity(), *s, l, e);
        } catch (const ConstraintViolation& ex) {
            throw Stuck(std::string("reduced sets do not define an EARS: ") + ex.what());
        }
        CharacterizeReport rep = characterize(anisotropic_window(next, Q(2)), next.space());
        if (!rep.pass() || !rep.type || *rep.type != to)
            throw Stuck("reduced root set fails the characterization");
        if (!allowed_type_change(cur.type(), to)) throw Stuck("type change " + cur.type().str() + " -> " + to.str());
        ExtractionStep step{cur.type(), to, cert.targets, cert};
        out.chain.push_back(std::move(step));
        out.result = std::move(next);
    }
}

} // namespace ears
